#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace liesym {

using Int = mpz_class;
// mpq_class keeps itself canonical under arithmetic: reduced, positive denominator, 0 == 0/1.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

// Accepts "p" or "p/q" with an optional leading '-'. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

Int lcm_of_denominators(std::span<const Rat> values);

double to_double(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace liesym
