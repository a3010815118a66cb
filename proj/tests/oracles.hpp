#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// these oracles check.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "chein/cayley_table.hpp"
#include "chein/group.hpp"
#include "chein/pair_ops.hpp"

namespace oracle {

using chein::CayleyTable;
using chein::Element;
using chein::PairOp;

inline Element inv(const CayleyTable& g, Element x) {
  for (Element y = 0; y < g.order(); ++y) {
    if (g(x, y) == 0) return y;
  }
  return 0;
}

// (x^i y^j)^k with the exponents read off the multiplication column of the
// pair-operation table.
inline Element pair_multiply(PairOp op, Element x, Element y, const CayleyTable& g) {
  struct Exps { int i, j, k; };
  Exps e{};
  switch (op) {
    case PairOp::I: e = {1, 1, 1}; break;      // xy
    case PairOp::S: e = {-1, -1, -1}; break;   // yx = (x^-1 y^-1)^-1
    case PairOp::T: e = {-1, 1, -1}; break;    // y^-1 x = (x^-1 y)^-1
    case PairOp::T2: e = {-1, -1, 1}; break;   // x^-1 y^-1
    case PairOp::T3: e = {1, -1, -1}; break;   // y x^-1 = (x y^-1)^-1
    case PairOp::ST: e = {-1, 1, 1}; break;    // x^-1 y
    case PairOp::ST2: e = {1, 1, -1}; break;   // y^-1 x^-1 = (xy)^-1
    case PairOp::ST3: e = {1, -1, 1}; break;   // x y^-1
  }
  const Element a = e.i == 1 ? x : inv(g, x);
  const Element b = e.j == 1 ? y : inv(g, y);
  const Element p = g(a, b);
  return e.k == 1 ? p : inv(g, p);
}

// Chein's loop written out quarter by quarter.
inline CayleyTable chein_formula(const CayleyTable& g) {
  const auto n = static_cast<Element>(g.order());
  CayleyTable t(2 * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t.set(x, y, g(x, y));                    // x*y = xy
      t.set(x, n + y, n + g(y, x));            // x*ybar = bar(yx)
      t.set(n + x, y, n + g(x, inv(g, y)));    // xbar*y = bar(x y^-1)
      t.set(n + x, n + y, g(inv(g, y), x));    // xbar*ybar = y^-1 x
    }
  }
  return t;
}

inline bool associative(const CayleyTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

// ((xy)x)z = x(y(xz)) by hand.
inline bool moufang_1(const CayleyTable& t) {
  const auto n = static_cast<Element>(t.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t(t(t(x, y), x), z) != t(x, t(y, t(x, z)))) return false;
  return true;
}

inline std::size_t center_size(const CayleyTable& t) {
  std::size_t count = 0;
  for (Element z = 0; z < t.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < t.order(); ++x) central = central && t(z, x) == t(x, z);
    count += central;
  }
  return count;
}

// Exhaustive search over all bijections fixing 0. Small orders only.
inline bool isomorphic_brute_force(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) return false;
  const auto n = static_cast<Element>(a.order());
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  do {
    bool ok = true;
    for (Element r = 0; r < n && ok; ++r)
      for (Element c = 0; c < n && ok; ++c) ok = p[a(r, c)] == b(p[r], p[c]);
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

// Relabel t by a bijection fixing 0: result(p[r], p[c]) = p[t(r, c)].
inline CayleyTable relabel(const CayleyTable& t, const std::vector<Element>& p) {
  CayleyTable out(t.order());
  for (Element r = 0; r < t.order(); ++r)
    for (Element c = 0; c < t.order(); ++c) out.set(p[r], p[c], p[t(r, c)]);
  return out;
}

inline std::vector<Element> random_permutation_fixing_zero(std::size_t n,
                                                           std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin() + 1, p.end(), rng);
  return p;
}

inline CayleyTable random_magma(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  std::vector<Element> entries(n * n);
  for (auto& e : entries) e = pick(rng);
  return CayleyTable(n, std::move(entries));
}

inline chein::OpMatrix random_matrix(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, chein::OpMatrix::kCount - 1);
  return chein::OpMatrix::from_index(pick(rng));
}

}  // namespace oracle
