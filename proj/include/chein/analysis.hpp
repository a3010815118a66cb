#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chein/cayley_table.hpp"
#include "chein/double_construction.hpp"
#include "chein/group.hpp"
#include "chein/pair_ops.hpp"

namespace chein {

enum class Flag {
  is_quasigroup,
  is_loop,
  has_two_sided_inverses,
  has_inverse_property,
  is_flexible,
  is_left_bol,
  is_right_bol,
  is_moufang,
  is_diassociative,
  is_associative,
};

inline constexpr std::array<Flag, 10> kAllFlags = {
    Flag::is_quasigroup,    Flag::is_loop,          Flag::has_two_sided_inverses,
    Flag::has_inverse_property, Flag::is_flexible,  Flag::is_left_bol,
    Flag::is_right_bol,     Flag::is_moufang,       Flag::is_diassociative,
    Flag::is_associative};

std::string_view name(Flag f) noexcept;

// Structural predicates of a finite magma. Loop-class flags (inverses, IP,
// Bol, Moufang, diassociativity) are false with a recorded reason when the
// magma is not a loop; flexibility and associativity are plain identities.
struct PropertyReport {
  std::array<bool, 10> flags{};
  std::optional<Element> neutral;
  // Each of the four Moufang laws separately (loops only).
  std::array<bool, 4> moufang_forms{};
  // Element indices demonstrating a failed flag. Identity failures list the
  // variable assignment; diassociativity lists the two generators followed by
  // a non-associative triple inside their closure; two-sided inverses list
  // (x, y) with x*y = e but y*x != e; quasigroup lists {r1, c1, r2, c2}.
  std::map<Flag, std::vector<Element>> witness;
  // Failed flags that have no element witness.
  std::map<Flag, std::string> reason;

  bool operator[](Flag f) const noexcept {
    return flags[static_cast<std::size_t>(f)];
  }
  bool& operator[](Flag f) noexcept { return flags[static_cast<std::size_t>(f)]; }
};

PropertyReport analyze(const CayleyTable& magma);
inline PropertyReport analyze(const DoubledMagma& d) { return analyze(d.table); }

// Pair-closure check: every subset generated by two elements and the neutral
// element is associative. Returns the first failing (a, b, x, y, z).
std::optional<std::array<Element, 5>> find_diassociativity_violation(
    const CayleyTable& loop, Element neutral);

// Closed-form loop criterion on the matrix alone: alpha in {i, s},
// beta in {i, s, t3, st}, gamma in {i, s, t, st3}, delta arbitrary.
bool lemma1_gate(const OpMatrix& m) noexcept;

struct Triple {
  PairOp beta;
  PairOp gamma;
  PairOp delta;
  constexpr bool operator==(const Triple&) const = default;
  constexpr auto operator<=>(const Triple& o) const noexcept {
    return std::array{index_of(beta), index_of(gamma), index_of(delta)} <=>
           std::array{index_of(o.beta), index_of(o.gamma), index_of(o.delta)};
  }
  std::string to_string() const;
};

// The eight candidate triples for diassociative loops with alpha = i, as
// listed with the classification.
const std::vector<Triple>& candidate_diass_triples();

enum class DiassStage {
  // (xbar xbar) y = xbar (xbar y) only.
  SquareLaw,
  // Additionally xbar (y xbar) = (xbar y) xbar.
  SquareAndFlexibleLaws,
};

// Brute force over G^2 for every (beta, gamma, delta) with beta, gamma passing
// the loop gate. Sorted canonically. Throws HypothesisError for abelian g.
std::vector<Triple> diass_triples(
    const Group& g, DiassStage stage = DiassStage::SquareAndFlexibleLaws);

}  // namespace chein
