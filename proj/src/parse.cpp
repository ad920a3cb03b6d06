#include "liesym/parse.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

enum class Tok { Ident, Integer, Slash, Star, Caret, Plus, Minus, Equals, Prime, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '.') throw ParseError(ParseErrorKind::FloatLiteral, lineno, col, "floating-point literals are not allowed; write p/q");
    if (digit(c)) {
      std::size_t j = i;
      while (j < line.size() && digit(line[j])) ++j;
      if (j < line.size() && line[j] == '.')
        throw ParseError(ParseErrorKind::FloatLiteral, lineno, col, "floating-point literals are not allowed; write p/q");
      if (j < line.size() && (line[j] == 'e' || line[j] == 'E') && j + 1 < line.size() &&
          (digit(line[j + 1]) || line[j + 1] == '-' || line[j + 1] == '+'))
        throw ParseError(ParseErrorKind::FloatLiteral, lineno, col, "floating-point literals are not allowed; write p/q");
      if (j < line.size() && ident_char(line[j]))
        throw ParseError(ParseErrorKind::Syntax, lineno, j + 1, "missing '*' between number and identifier");
      out.push_back({Tok::Integer, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::Slash; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '=': kind = Tok::Equals; break;
      case '\'': kind = Tok::Prime; break;
      case ':': kind = Tok::Colon; break;
      default:
        throw ParseError(ParseErrorKind::Syntax, lineno, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

struct Line {
  std::size_t number;
  std::vector<Token> toks;
};

class Cursor {
 public:
  Cursor(const Line& line) : line_(line) {}  // NOLINT

  const Token& peek() const { return line_.toks[pos_]; }
  const Token& next() { return line_.toks[pos_ < line_.toks.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& msg, ParseErrorKind kind = ParseErrorKind::Syntax) const {
    throw ParseError(kind, line_.number, peek().column, msg);
  }
  std::size_t lineno() const { return line_.number; }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

Rat parse_integer_token(const Token& t) { return Rat(Int(t.text, 10)); }

// rational := integer ["/" positive-integer]   (sign handled by callers)
Rat parse_unsigned_rational(Cursor& cur) {
  Rat v = parse_integer_token(cur.expect(Tok::Integer, "integer"));
  if (cur.accept(Tok::Slash)) {
    const Token& d = cur.expect(Tok::Integer, "denominator");
    Rat den = parse_integer_token(d);
    if (den == 0) throw ParseError(ParseErrorKind::Syntax, cur.lineno(), d.column, "zero denominator");
    v /= den;
  }
  return v;
}

struct Scope {
  std::vector<std::string> vars;
  std::map<std::string, std::size_t> var_index;
  std::map<std::string, std::optional<Rat>> params;
};

int parse_exponent(Cursor& cur) {
  if (!cur.accept(Tok::Caret)) return 1;
  const Token& t = cur.expect(Tok::Integer, "integer exponent");
  if (t.text.size() > 6) throw ParseError(ParseErrorKind::Syntax, cur.lineno(), t.column, "exponent too large");
  return std::stoi(t.text);
}

MultiPoly parse_term(Cursor& cur, const Scope& scope) {
  const std::size_t n = scope.vars.size();
  Rat coeff = 1;
  Exponent e(n, 0);
  do {
    const Token& t = cur.peek();
    if (t.kind == Tok::Integer) {
      coeff *= parse_unsigned_rational(cur);
      if (cur.peek().kind == Tok::Caret) cur.fail("exponents apply to identifiers only");
    } else if (t.kind == Tok::Ident) {
      Token id = cur.next();
      int k = parse_exponent(cur);
      if (auto v = scope.var_index.find(id.text); v != scope.var_index.end()) {
        e[v->second] += k;
      } else if (auto p = scope.params.find(id.text); p != scope.params.end()) {
        if (!p->second)
          throw ParseError(ParseErrorKind::UnboundParameter, cur.lineno(), id.column, "parameter '" + id.text + "' has no value");
        Rat pv = 1;
        for (int i = 0; i < k; ++i) pv *= *p->second;
        coeff *= pv;
      } else {
        throw ParseError(ParseErrorKind::UndeclaredIdentifier, cur.lineno(), id.column, "undeclared identifier '" + id.text + "'");
      }
    } else {
      cur.fail("expected a number or identifier");
    }
  } while (cur.accept(Tok::Star));
  return MultiPoly::monomial(e, coeff);
}

MultiPoly parse_polyexpr(Cursor& cur, const Scope& scope) {
  MultiPoly sum(scope.vars.size());
  bool negative = false;
  if (cur.accept(Tok::Minus))
    negative = true;
  else
    cur.accept(Tok::Plus);
  for (;;) {
    MultiPoly t = parse_term(cur, scope);
    if (negative) t = -t;
    sum += t;
    if (cur.accept(Tok::Plus))
      negative = false;
    else if (cur.accept(Tok::Minus))
      negative = true;
    else
      break;
  }
  if (cur.peek().kind != Tok::End) cur.fail("unexpected '" + cur.peek().text + "'");
  return sum;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++lineno;
    auto toks = tokenize(raw, lineno);
    if (toks.size() > 1) lines.push_back({lineno, std::move(toks)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_keyword(const Line& l, const char* kw) { return l.toks[0].kind == Tok::Ident && l.toks[0].text == kw; }

// Pass 1: vars and params. Returns the scope with overrides applied.
Scope declare(const std::vector<Line>& lines, const ParamOverrides& overrides) {
  Scope scope;
  bool have_vars = false;
  std::map<std::string, std::size_t> param_line;
  for (const auto& line : lines) {
    Cursor cur(line);
    if (is_keyword(line, "vars")) {
      cur.next();
      cur.expect(Tok::Colon, "':' after 'vars'");
      if (have_vars) cur.fail("variables declared twice");
      have_vars = true;
      while (cur.peek().kind == Tok::Ident) {
        const Token& id = cur.next();
        if (scope.var_index.count(id.text))
          throw ParseError(ParseErrorKind::Syntax, line.number, id.column, "variable '" + id.text + "' declared twice");
        scope.var_index[id.text] = scope.vars.size();
        scope.vars.push_back(id.text);
      }
      if (cur.peek().kind != Tok::End) cur.fail("expected variable name");
      if (scope.vars.empty()) cur.fail("'vars:' needs at least one variable");
    } else if (is_keyword(line, "param")) {
      cur.next();
      const Token& id = cur.expect(Tok::Ident, "parameter name");
      std::string name = id.text;
      if (scope.params.count(name))
        throw ParseError(ParseErrorKind::Syntax, line.number, id.column, "parameter '" + name + "' declared twice");
      std::optional<Rat> value;
      if (cur.accept(Tok::Equals)) {
        bool neg = cur.accept(Tok::Minus);
        Rat v = parse_unsigned_rational(cur);
        value = neg ? Rat(-v) : v;
      }
      if (cur.peek().kind != Tok::End) cur.fail("unexpected '" + cur.peek().text + "'");
      scope.params[name] = value;
      param_line[name] = line.number;
    }
  }
  for (const auto& [name, value] : overrides) {
    auto it = scope.params.find(name);
    if (it == scope.params.end())
      throw ParseError(ParseErrorKind::UndeclaredIdentifier, 0, 0, "override for undeclared parameter '" + name + "'");
    it->second = value;
  }
  for (const auto& [name, value] : scope.params)
    if (!value)
      throw ParseError(ParseErrorKind::UnboundParameter, param_line[name], 1,
                       "parameter '" + name + "' needs a value (in the file or via --set " + name + "=p/q)");
  for (const auto& [name, idx] : scope.var_index)
    if (scope.params.count(name))
      throw ParseError(ParseErrorKind::Syntax, param_line[name], 1, "'" + name + "' is both a variable and a parameter");
  return scope;
}

// eq NAME ' = expr
std::pair<std::size_t, MultiPoly> parse_equation(const Line& line, const Scope& scope) {
  Cursor cur(line);
  cur.next();
  const Token& id = cur.expect(Tok::Ident, "variable name after 'eq'");
  auto it = scope.var_index.find(id.text);
  if (it == scope.var_index.end())
    throw ParseError(ParseErrorKind::UndeclaredIdentifier, line.number, id.column, "equation for undeclared variable '" + id.text + "'");
  cur.expect(Tok::Prime, "'\\'' after variable name");
  cur.expect(Tok::Equals, "'='");
  return {it->second, parse_polyexpr(cur, scope)};
}

}  // namespace

SystemDef parse_system(std::string_view text, const ParamOverrides& overrides) {
  auto lines = split_lines(text);
  Scope scope = declare(lines, overrides);
  if (scope.vars.empty()) throw ParseError(ParseErrorKind::Syntax, 1, 1, "missing 'vars:' declaration");
  const std::size_t n = scope.vars.size();
  std::vector<std::optional<MultiPoly>> eqs(n);
  for (const auto& line : lines) {
    if (is_keyword(line, "vars") || is_keyword(line, "param")) continue;
    if (!is_keyword(line, "eq")) {
      Cursor(line).fail("expected 'vars:', 'param' or 'eq'");
    }
    auto [idx, poly] = parse_equation(line, scope);
    if (eqs[idx])
      throw ParseError(ParseErrorKind::DuplicateEquation, line.number, line.toks[1].column,
                       "second equation for '" + scope.vars[idx] + "'");
    eqs[idx] = std::move(poly);
  }
  SystemDef s;
  s.var_names = scope.vars;
  std::vector<MultiPoly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    if (!eqs[i])
      throw ParseError(ParseErrorKind::MissingEquation, lines.empty() ? 1 : lines.back().number, 1,
                       "no equation for '" + scope.vars[i] + "'");
    comps.push_back(std::move(*eqs[i]));
  }
  s.equations = VectorField(scope.vars, std::move(comps));
  for (const auto& [name, value] : scope.params) s.bound_params[name] = *value;
  return s;
}

std::string format_system(const SystemDef& s) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : s.var_names) os << ' ' << v;
  os << '\n';
  for (const auto& [name, value] : s.bound_params) os << "param " << name << " = " << to_string(value) << '\n';
  for (std::size_t i = 0; i < s.var_names.size(); ++i)
    os << "eq " << s.var_names[i] << "' = " << to_string(s.equations.comps[i], s.var_names) << '\n';
  return os.str();
}

std::vector<NamedField> parse_fields(std::string_view text, const ParamOverrides& overrides) {
  auto lines = split_lines(text);
  Scope scope = declare(lines, overrides);
  if (scope.vars.empty()) throw ParseError(ParseErrorKind::Syntax, 1, 1, "missing 'vars:' declaration");
  std::vector<NamedField> out;
  std::set<std::string> names;
  std::vector<bool> seen;
  auto open = [&](const std::string& name) {
    out.push_back({name, VectorField::zero(scope.vars)});
    seen.assign(scope.vars.size(), false);
  };
  for (const auto& line : lines) {
    if (is_keyword(line, "vars") || is_keyword(line, "param")) continue;
    if (is_keyword(line, "field")) {
      Cursor cur(line);
      cur.next();
      const Token& id = cur.expect(Tok::Ident, "field name");
      if (!names.insert(id.text).second)
        throw ParseError(ParseErrorKind::Syntax, line.number, id.column, "field '" + id.text + "' defined twice");
      if (cur.peek().kind != Tok::End) cur.fail("unexpected '" + cur.peek().text + "'");
      open(id.text);
      continue;
    }
    if (!is_keyword(line, "eq")) Cursor(line).fail("expected 'vars:', 'param', 'field' or 'eq'");
    if (out.empty()) {
      names.insert("X1");
      open("X1");
    }
    auto [idx, poly] = parse_equation(line, scope);
    if (seen[idx])
      throw ParseError(ParseErrorKind::DuplicateEquation, line.number, line.toks[1].column,
                       "second component for '" + scope.vars[idx] + "' in field '" + out.back().name + "'");
    seen[idx] = true;
    out.back().field.comps[idx] = std::move(poly);
  }
  return out;
}

std::string format_field(const VectorField& vf, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "field " << name << '\n';
  for (std::size_t i = 0; i < vf.dim(); ++i)
    os << "eq " << vf.vars[i] << "' = " << to_string(vf.comps[i], vf.vars) << '\n';
  return os.str();
}

std::pair<std::string, Rat> parse_override(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw std::invalid_argument("expected name=p/q, got '" + std::string(text) + "'");
  std::string name(text.substr(0, eq));
  std::string_view value = text.substr(eq + 1);
  if (value.find('.') != std::string_view::npos)
    throw std::invalid_argument("floating-point values are not allowed in '" + std::string(text) + "'; write p/q");
  return {name, parse_rat(value)};
}

}  // namespace liesym
