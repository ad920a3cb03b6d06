#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liesym/rat.hpp"
#include "liesym/vfield.hpp"

namespace liesym {

// A polynomial ODE system x' = f(x) with every parameter already bound to a rational.
struct SystemDef {
  std::vector<std::string> var_names;
  VectorField equations;
  std::map<std::string, Rat> bound_params;

  friend bool operator==(const SystemDef& a, const SystemDef& b) {
    return a.var_names == b.var_names && a.equations == b.equations && a.bound_params == b.bound_params;
  }
};

using ParamOverrides = std::map<std::string, Rat>;

// Grammar (one statement per line, '#' starts a comment):
//   vars: x1 x2 ...
//   param a [= p/q]
//   eq x1' = <polynomial>
// Throws ParseError carrying line and column.
SystemDef parse_system(std::string_view text, const ParamOverrides& overrides = {});

std::string format_system(const SystemDef& s);

struct NamedField {
  std::string name;
  VectorField field;
};

// Vector-field files use the same statements plus `field NAME`, which opens a
// new field. Components without an `eq` line are zero. A file without any
// `field` line holds a single field named after the file contents' position ("X1").
std::vector<NamedField> parse_fields(std::string_view text, const ParamOverrides& overrides = {});

std::string format_field(const VectorField& vf, const std::string& name = "");

// Parses "name=p/q".
std::pair<std::string, Rat> parse_override(std::string_view text);

}  // namespace liesym
