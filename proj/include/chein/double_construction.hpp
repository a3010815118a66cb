#pragma once

#include <cstddef>
#include <optional>

#include "chein/cayley_table.hpp"
#include "chein/group.hpp"
#include "chein/pair_ops.hpp"

namespace chein {

// Magma of order 2n on G u Gbar. Elements 0..n-1 are G with the group's own
// numbering; xbar is n + x.
struct DoubledMagma {
  CayleyTable table;
  std::optional<GroupSpec> group;
  OpMatrix matrix;
  std::size_t base_order = 0;

  bool is_bar(Element e) const noexcept { return e >= base_order; }
};

// Quarter rule, for x, y in G:
//   x * y       = alpha(x, y)
//   x * ybar    = bar(beta(x, y))
//   xbar * y    = bar(gamma(x, y))
//   xbar * ybar = delta(x, y)
DoubledMagma build_double(const Group& g, const OpMatrix& m);

// M(G, 2): x*y = xy, x*ybar = bar(yx), xbar*y = bar(xy^-1), xbar*ybar = y^-1 x.
DoubledMagma chein(const Group& g);

// The double of g under opposite_matrix(d.matrix). Throws
// std::invalid_argument if d was not built over a group of g's order.
DoubledMagma opposite(const Group& g, const DoubledMagma& d);

}  // namespace chein
