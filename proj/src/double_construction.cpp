#include "chein/double_construction.hpp"

#include <stdexcept>

namespace chein {

DoubledMagma build_double(const Group& g, const OpMatrix& m) {
  const auto n = static_cast<Element>(g.order());
  DoubledMagma d;
  d.table = CayleyTable(2 * static_cast<std::size_t>(n));
  d.group = g.spec();
  d.matrix = m;
  d.base_order = n;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      d.table.set(x, y, apply_unchecked(m.alpha, x, y, g));
      d.table.set(x, n + y, n + apply_unchecked(m.beta, x, y, g));
      d.table.set(n + x, y, n + apply_unchecked(m.gamma, x, y, g));
      d.table.set(n + x, n + y, apply_unchecked(m.delta, x, y, g));
    }
  }
  return d;
}

DoubledMagma chein(const Group& g) {
  return build_double(g, named_matrix(NamedMatrix::M_c));
}

DoubledMagma opposite(const Group& g, const DoubledMagma& d) {
  if (d.base_order != g.order()) {
    throw std::invalid_argument("doubled magma was not built over this group");
  }
  return build_double(g, opposite_matrix(d.matrix));
}

}  // namespace chein
