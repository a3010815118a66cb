#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chein/cayley_table.hpp"

namespace chein {

class Group;

// The eight permutations of G x G generated by
//   sigma: (x, y) -> (y, x)      tau: (x, y) -> (y^-1, x)
// read as multiplications (x, y) -> first * second of the transformed pair.
// Composite symbols are read left to right, maps acting on the right:
// "st" is sigma then tau.
enum class PairOp : std::uint8_t { I, S, T, T2, T3, ST, ST2, ST3 };

inline constexpr std::array<PairOp, 8> kAllPairOps = {
    PairOp::I,  PairOp::S,  PairOp::T,   PairOp::T2,
    PairOp::T3, PairOp::ST, PairOp::ST2, PairOp::ST3};

constexpr std::size_t index_of(PairOp op) noexcept {
  return static_cast<std::size_t>(op);
}

// One coordinate of a transformed pair: x or y, possibly inverted.
struct PairSlot {
  std::uint8_t source;  // 0 = x, 1 = y
  bool inverted;
  constexpr bool operator==(const PairSlot&) const = default;
};

struct PairAction {
  PairSlot first;
  PairSlot second;
  constexpr bool operator==(const PairAction&) const = default;
};

inline constexpr std::array<PairAction, 8> kPairActions = {{
    {{0, false}, {1, false}},  // i    (x, y)
    {{1, false}, {0, false}},  // s    (y, x)
    {{1, true}, {0, false}},   // t    (y^-1, x)
    {{0, true}, {1, true}},    // t2   (x^-1, y^-1)
    {{1, false}, {0, true}},   // t3   (y, x^-1)
    {{0, true}, {1, false}},   // st   (x^-1, y)
    {{1, true}, {0, true}},    // st2  (y^-1, x^-1)
    {{0, false}, {1, true}},   // st3  (x, y^-1)
}};

constexpr const PairAction& action_of(PairOp op) noexcept {
  return kPairActions[index_of(op)];
}

namespace detail {

constexpr PairSlot substitute(const PairAction& inner, PairSlot outer) {
  PairSlot s = outer.source == 0 ? inner.first : inner.second;
  return {s.source, s.inverted != outer.inverted};
}

constexpr PairOp op_from_action(const PairAction& a) {
  for (PairOp op : kAllPairOps) {
    if (action_of(op) == a) return op;
  }
  return PairOp::I;  // unreachable: the action set is closed
}

constexpr std::array<std::array<PairOp, 8>, 8> make_composition_table() {
  std::array<std::array<PairOp, 8>, 8> table{};
  for (PairOp first : kAllPairOps) {
    for (PairOp then : kAllPairOps) {
      const PairAction& f = action_of(first);
      const PairAction& g = action_of(then);
      table[index_of(first)][index_of(then)] =
          op_from_action({substitute(f, g.first), substitute(f, g.second)});
    }
  }
  return table;
}

inline constexpr auto kCompositionTable = make_composition_table();

}  // namespace detail

// (x, y)compose(first, then) == ((x, y)first)then.
constexpr PairOp compose(PairOp first, PairOp then) noexcept {
  return detail::kCompositionTable[index_of(first)][index_of(then)];
}

std::string_view name(PairOp op) noexcept;
// Case-insensitive; throws std::invalid_argument.
PairOp parse_pair_op(std::string_view text);

// (x, y) psi Delta: transform the pair, then multiply in g.
// Throws std::out_of_range on invalid indices.
Element apply(PairOp op, Element x, Element y, const Group& g);

// Unchecked variant for inner loops.
Element apply_unchecked(PairOp op, Element x, Element y, const Group& g) noexcept;

// Assignment of pair-multiplications to the four quarters
// G x G, G x Gbar, Gbar x G, Gbar x Gbar.
struct OpMatrix {
  PairOp alpha = PairOp::I;
  PairOp beta = PairOp::I;
  PairOp gamma = PairOp::I;
  PairOp delta = PairOp::I;

  static constexpr std::size_t kCount = 4096;

  // Canonical ordering index in [0, 4096): alpha is most significant.
  constexpr std::size_t index() const noexcept {
    return ((index_of(alpha) * 8 + index_of(beta)) * 8 + index_of(gamma)) * 8 +
           index_of(delta);
  }
  static constexpr OpMatrix from_index(std::size_t i) noexcept {
    return {kAllPairOps[(i >> 9) & 7], kAllPairOps[(i >> 6) & 7],
            kAllPairOps[(i >> 3) & 7], kAllPairOps[i & 7]};
  }

  // "a,b,c,d" in row-major order (alpha, beta, gamma, delta).
  std::string to_string() const;
  // Accepts a named matrix (M_c, op_G_tau, ...) or a quadruple "a,b,c,d".
  static OpMatrix parse(std::string_view text);

  constexpr bool operator==(const OpMatrix&) const = default;
  constexpr auto operator<=>(const OpMatrix& o) const noexcept {
    return index() <=> o.index();
  }
};

enum class NamedMatrix {
  G_iota,
  G_tau,
  M_c,
  M_sigma,
  op_G_iota,
  op_G_tau,
  op_M_c,
  op_M_sigma
};

inline constexpr std::array<NamedMatrix, 8> kAllNamedMatrices = {
    NamedMatrix::G_iota,    NamedMatrix::G_tau,    NamedMatrix::M_c,
    NamedMatrix::M_sigma,   NamedMatrix::op_G_iota, NamedMatrix::op_G_tau,
    NamedMatrix::op_M_c,    NamedMatrix::op_M_sigma};

OpMatrix named_matrix(NamedMatrix which) noexcept;
std::string_view name(NamedMatrix which) noexcept;
std::optional<NamedMatrix> parse_named_matrix(std::string_view text);
std::optional<NamedMatrix> matrix_name(const OpMatrix& m);

// (sigma alpha, sigma gamma, sigma beta, sigma delta): the opposite magma.
constexpr OpMatrix opposite_matrix(const OpMatrix& m) noexcept {
  return {compose(PairOp::S, m.alpha), compose(PairOp::S, m.gamma),
          compose(PairOp::S, m.beta), compose(PairOp::S, m.delta)};
}

// (alpha, tau^3 beta, gamma tau, tau^2 delta).
constexpr OpMatrix t_transform(const OpMatrix& m) noexcept {
  return {m.alpha, compose(PairOp::T3, m.beta), compose(m.gamma, PairOp::T),
          compose(PairOp::T2, m.delta)};
}

}  // namespace chein
