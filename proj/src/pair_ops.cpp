#include "chein/pair_ops.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>

#include "chein/group.hpp"

namespace chein {

namespace {

constexpr std::array<std::string_view, 8> kPairOpNames = {
    "i", "s", "t", "t2", "t3", "st", "st2", "st3"};

constexpr std::array<std::string_view, 8> kMatrixNames = {
    "G_iota",    "G_tau",    "M_c",    "M_sigma",
    "op_G_iota", "op_G_tau", "op_M_c", "op_M_sigma"};

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

}  // namespace

std::string_view name(PairOp op) noexcept { return kPairOpNames[index_of(op)]; }

PairOp parse_pair_op(std::string_view text) {
  const std::string key = lowercase(trim(text));
  for (PairOp op : kAllPairOps) {
    if (name(op) == key) return op;
  }
  throw std::invalid_argument("unknown pair operation '" + std::string(text) +
                              "' (expected one of i,s,t,t2,t3,st,st2,st3)");
}

Element apply_unchecked(PairOp op, Element x, Element y, const Group& g) noexcept {
  const PairAction& a = action_of(op);
  auto pick = [&](PairSlot slot) {
    const Element v = slot.source == 0 ? x : y;
    return slot.inverted ? g.inverse(v) : v;
  };
  return g.mul(pick(a.first), pick(a.second));
}

Element apply(PairOp op, Element x, Element y, const Group& g) {
  if (x >= g.order() || y >= g.order()) {
    throw std::out_of_range("pair operation argument out of range");
  }
  return apply_unchecked(op, x, y, g);
}

std::string OpMatrix::to_string() const {
  std::string out;
  for (PairOp op : {alpha, beta, gamma, delta}) {
    if (!out.empty()) out += ',';
    out += name(op);
  }
  return out;
}

OpMatrix OpMatrix::parse(std::string_view text) {
  if (auto named = parse_named_matrix(trim(text))) return named_matrix(*named);
  std::array<PairOp, 4> ops{};
  std::size_t start = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t comma = text.find(',', start);
    if ((k < 3) == (comma == std::string_view::npos)) {
      throw std::invalid_argument("matrix must be a name or 'a,b,c,d', got '" +
                                  std::string(text) + "'");
    }
    ops[k] = parse_pair_op(text.substr(start, comma - start));
    start = comma + 1;
  }
  return {ops[0], ops[1], ops[2], ops[3]};
}

OpMatrix named_matrix(NamedMatrix which) noexcept {
  using P = PairOp;
  switch (which) {
    case NamedMatrix::G_iota: return {P::I, P::I, P::I, P::I};
    case NamedMatrix::G_tau: return {P::I, P::T3, P::T, P::T2};
    case NamedMatrix::M_c: return {P::I, P::S, P::ST3, P::T};
    case NamedMatrix::M_sigma: return {P::I, P::ST, P::S, P::T3};
    case NamedMatrix::op_G_iota: return {P::S, P::S, P::S, P::S};
    case NamedMatrix::op_G_tau: return {P::S, P::ST, P::ST3, P::ST2};
    case NamedMatrix::op_M_c: return {P::S, P::T3, P::I, P::ST};
    case NamedMatrix::op_M_sigma: return {P::S, P::I, P::T, P::ST3};
  }
  return {};
}

std::string_view name(NamedMatrix which) noexcept {
  return kMatrixNames[static_cast<std::size_t>(which)];
}

std::optional<NamedMatrix> parse_named_matrix(std::string_view text) {
  for (NamedMatrix m : kAllNamedMatrices) {
    if (name(m) == text) return m;
  }
  return std::nullopt;
}

std::optional<NamedMatrix> matrix_name(const OpMatrix& m) {
  for (NamedMatrix n : kAllNamedMatrices) {
    if (named_matrix(n) == m) return n;
  }
  return std::nullopt;
}

}  // namespace chein
