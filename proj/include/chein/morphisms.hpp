#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chein/cayley_table.hpp"
#include "chein/group.hpp"

namespace chein {

struct ElementMap {
  std::vector<Element> images;  // images[x] is the image of x

  Element operator()(Element x) const noexcept { return images[x]; }
  bool is_bijection() const;
  bool operator==(const ElementMap&) const = default;
};

// f(a(r, c)) == b(f(r), f(c)) for all r, c. Throws std::invalid_argument on an
// order mismatch.
bool verify_homomorphism(const CayleyTable& a, const CayleyTable& b,
                         const ElementMap& f);

// x -> x and xbar -> bar(x^-1) on G u Gbar.
ElementMap lemma5_map(const Group& g);

inline constexpr std::size_t kMaxIsomorphismOrder = 64;

// Complete backtracking search for an isomorphism a -> b fixing the neutral
// element 0. Generator images are tried in order of increasing fingerprint
// class size; products of assigned elements are propagated.
// Throws HypothesisError if an input is not a loop with neutral 0, or if the
// order exceeds kMaxIsomorphismOrder (search not attempted).
std::optional<ElementMap> are_isomorphic(const CayleyTable& a,
                                         const CayleyTable& b);

// Isomorphism from a onto the opposite of b.
std::optional<ElementMap> are_anti_isomorphic(const CayleyTable& a,
                                              const CayleyTable& b);

// Per-element invariants: left order (smallest k with x^k = e for left powers
// x, x*x, x*(x*x), ...; 0 if never reached), left order of x*x, and the number
// of elements commuting with x.
struct ElementFingerprint {
  std::size_t left_order;
  std::size_t square_left_order;
  std::size_t commutant;
  auto operator<=>(const ElementFingerprint&) const = default;
};

std::vector<ElementFingerprint> element_fingerprints(const CayleyTable& loop,
                                                     Element neutral = 0);

// Sorted multiset of element fingerprints; equal for isomorphic loops.
std::vector<ElementFingerprint> loop_fingerprint(const CayleyTable& loop);

}  // namespace chein
