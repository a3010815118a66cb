#include "chein/identity.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

#include "chein/errors.hpp"

namespace chein {

std::uint32_t Term::add_variable(std::uint32_t var) {
  nodes_.push_back({Kind::Variable, var, 0, 0});
  return root();
}

std::uint32_t Term::add_product(std::uint32_t left, std::uint32_t right) {
  nodes_.push_back({Kind::Product, 0, left, right});
  return root();
}

std::uint32_t Term::add_inverse(std::uint32_t child) {
  nodes_.push_back({Kind::Inverse, 0, child, 0});
  return root();
}

bool Term::uses_inverse() const noexcept {
  for (const Node& n : nodes_) {
    if (n.kind == Kind::Inverse) return true;
  }
  return false;
}

bool structurally_equal(const Term& a, const Term& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  std::function<bool(std::uint32_t, std::uint32_t)> eq = [&](std::uint32_t i,
                                                            std::uint32_t j) {
    const Term::Node& x = a.nodes_[i];
    const Term::Node& y = b.nodes_[j];
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case Term::Kind::Variable: return x.variable == y.variable;
      case Term::Kind::Inverse: return eq(x.left, y.left);
      case Term::Kind::Product: return eq(x.left, y.left) && eq(x.right, y.right);
    }
    return false;
  };
  return eq(a.root(), b.root());
}

bool structurally_equal(const Identity& a, const Identity& b) {
  return a.variables == b.variables && structurally_equal(a.lhs, b.lhs) &&
         structurally_equal(a.rhs, b.rhs);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Identity run() {
    Identity id;
    skip_space();
    if (peek() == '=') throw ParseError("empty left side", pos_);
    parse_term(id.lhs, id.variables);
    skip_space();
    if (peek() != '=') throw error_here("expected '='");
    ++pos_;
    skip_space();
    if (at_end()) throw ParseError("empty right side", pos_);
    parse_term(id.rhs, id.variables);
    skip_space();
    if (!at_end()) throw error_here("unexpected");
    return id;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  ParseError error_here(const std::string& what) const {
    if (at_end()) return ParseError(what + " (end of input)", pos_);
    return ParseError(what + " '" + std::string(1, src_[pos_]) + "'", pos_);
  }

  std::uint32_t parse_term(Term& t, std::vector<std::string>& vars) {
    std::uint32_t left = parse_factor(t, vars);
    while (true) {
      skip_space();
      if (peek() != '*') return left;
      ++pos_;
      const std::uint32_t right = parse_factor(t, vars);
      left = t.add_product(left, right);
    }
  }

  std::uint32_t parse_factor(Term& t, std::vector<std::string>& vars) {
    const std::uint32_t atom = parse_atom(t, vars);
    skip_space();
    if (peek() != '^') return atom;
    const std::size_t caret = pos_;
    ++pos_;
    skip_space();
    if (peek() != '-') throw ParseError("expected '^-1'", caret);
    ++pos_;
    skip_space();
    if (peek() != '1') throw ParseError("expected '^-1'", caret);
    ++pos_;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("only the exponent -1 is supported", caret);
    }
    return t.add_inverse(atom);
  }

  std::uint32_t parse_atom(Term& t, std::vector<std::string>& vars) {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const std::uint32_t inner = parse_term(t, vars);
      skip_space();
      if (peek() != ')') throw error_here("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (std::isalpha(static_cast<unsigned char>(peek()))) {
        throw error_here("names are a letter followed by digits; unexpected");
      }
      const std::string name(src_.substr(start, pos_ - start));
      std::uint32_t index = 0;
      while (index < vars.size() && vars[index] != name) ++index;
      if (index == vars.size()) vars.push_back(name);
      return t.add_variable(index);
    }
    throw error_here("expected a variable or '('; unexpected");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void render(const Term& t, std::uint32_t node, const std::vector<std::string>& vars,
            bool top, std::string& out) {
  const Term::Node& n = t.nodes()[node];
  switch (n.kind) {
    case Term::Kind::Variable:
      out += vars[n.variable];
      return;
    case Term::Kind::Inverse:
      if (t.nodes()[n.left].kind == Term::Kind::Variable) {
        render(t, n.left, vars, true, out);
      } else {
        out += '(';
        render(t, n.left, vars, true, out);
        out += ')';
      }
      out += "^-1";
      return;
    case Term::Kind::Product:
      if (!top) out += '(';
      render(t, n.left, vars, false, out);
      out += '*';
      render(t, n.right, vars, false, out);
      if (!top) out += ')';
      return;
  }
}

struct BuiltinEntry {
  Builtin id;
  std::string_view name;
  std::string_view source;
};

constexpr std::array<BuiltinEntry, kBuiltinCount> kBuiltins = {{
    {Builtin::associativity, "associativity", "(x*y)*z = x*(y*z)"},
    {Builtin::commutativity, "commutativity", "x*y = y*x"},
    {Builtin::flexible, "flexible", "x*(y*x) = (x*y)*x"},
    {Builtin::left_bol, "left_bol", "x*(y*(x*z)) = (x*(y*x))*z"},
    {Builtin::right_bol, "right_bol", "((z*x)*y)*x = z*((x*y)*x)"},
    {Builtin::moufang_1, "moufang_1", "((x*y)*x)*z = x*(y*(x*z))"},
    {Builtin::moufang_2, "moufang_2", "((x*y)*z)*y = x*(y*(z*y))"},
    {Builtin::moufang_3, "moufang_3", "(x*y)*(z*x) = (x*(y*z))*x"},
    {Builtin::moufang_4, "moufang_4", "(x*y)*(z*x) = x*((y*z)*x)"},
    {Builtin::left_alternative, "left_alternative", "x*(x*y) = (x*x)*y"},
    {Builtin::right_alternative, "right_alternative", "(y*x)*x = y*(x*x)"},
    {Builtin::left_ip, "left_ip", "x^-1*(x*y) = y"},
    {Builtin::right_ip, "right_ip", "(y*x)*x^-1 = y"},
}};

}  // namespace

Identity parse_identity(std::string_view source) { return Parser(source).run(); }

std::string to_string(const Identity& id) {
  std::string out;
  render(id.lhs, id.lhs.root(), id.variables, true, out);
  out += " = ";
  render(id.rhs, id.rhs.root(), id.variables, true, out);
  return out;
}

std::string_view name(Builtin b) noexcept {
  return kBuiltins[static_cast<std::size_t>(b)].name;
}

std::string_view source_text(Builtin b) noexcept {
  return kBuiltins[static_cast<std::size_t>(b)].source;
}

Builtin parse_builtin(std::string_view text) {
  for (const auto& e : kBuiltins) {
    if (e.name == text) return e.id;
  }
  throw std::invalid_argument("unknown builtin identity '" + std::string(text) + "'");
}

const Identity& builtin(Builtin b) {
  static const auto parsed = [] {
    std::array<Identity, kBuiltinCount> all;
    for (std::size_t i = 0; i < kBuiltinCount; ++i) {
      all[i] = parse_identity(kBuiltins[i].source);
    }
    return all;
  }();
  return parsed[static_cast<std::size_t>(b)];
}

const Identity& builtin(std::string_view text) { return builtin(parse_builtin(text)); }

std::string format_counterexample(const Identity& id, const CheckResult& r) {
  std::string out;
  for (std::size_t i = 0; i < id.variables.size(); ++i) {
    out += id.variables[i] + "=" + std::to_string(r.assignment[i]) + " ";
  }
  out += "| lhs=" + std::to_string(r.lhs_value) + " rhs=" + std::to_string(r.rhs_value);
  return out;
}

}  // namespace chein
