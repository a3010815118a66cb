#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace chein {

using Element = std::uint32_t;

// Dense row-major multiplication table of a finite magma on {0, ..., n-1}.
// Entry (r, c) is the index of r * c. No algebraic law is assumed.
class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(std::size_t order);
  // Throws std::invalid_argument if entries.size() != order^2 or an entry is
  // out of range.
  CayleyTable(std::size_t order, std::vector<Element> entries);

  std::size_t order() const noexcept { return order_; }

  Element operator()(Element r, Element c) const noexcept {
    return entries_[static_cast<std::size_t>(r) * order_ + c];
  }
  Element at(Element r, Element c) const;
  void set(Element r, Element c, Element value);

  std::span<const Element> row(Element r) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(r) * order_, order_};
  }
  std::span<const Element> entries() const noexcept { return entries_; }

  CayleyTable transposed() const;

  bool operator==(const CayleyTable&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<Element> entries_;
};

// Two cells in a common row or column carrying the same value:
// {r1, c1, r2, c2}.
using LatinWitness = std::array<Element, 4>;

std::optional<LatinWitness> find_latin_violation(const CayleyTable& t);
inline bool is_latin_square(const CayleyTable& t) {
  return !find_latin_violation(t).has_value();
}

// Two-sided neutral element, if any (unique when it exists).
std::optional<Element> find_neutral(const CayleyTable& t);

// Direct O(n^3) scan; the first (a, b, c) in lexicographic order with
// (ab)c != a(bc).
std::optional<std::array<Element, 3>> find_nonassociative_triple(
    const CayleyTable& t);

// Text format: first non-comment line is the order n, followed by n rows of n
// whitespace-separated indices. Lines starting with '#' are ignored.
CayleyTable read_table(std::istream& in);
void write_table(std::ostream& out, const CayleyTable& t);

}  // namespace chein
