#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chein/cayley_table.hpp"

namespace chein {

// Description of one of the supported concrete groups.
//
// Element numbering is deterministic per kind, always with the identity at 0:
//   cyclic(m)        powers g^0, ..., g^(m-1) of a generator
//   dihedral(2m)     rotations r^0..r^(m-1), then reflections r^k s
//   symmetric(m)     permutations of {0..m-1} in lexicographic one-line order
//   quaternion8      1, -1, i, -i, j, -j, k, -k
//   direct product   (a, b) at index a * |B| + b
class GroupSpec {
 public:
  enum class Kind { Cyclic, Dihedral, Symmetric, Quaternion8, DirectProduct };

  static constexpr unsigned kMaxSymmetricDegree = 6;
  static constexpr std::size_t kMaxOrder = 4096;

  static GroupSpec cyclic(unsigned order);
  static GroupSpec dihedral(unsigned order);
  static GroupSpec symmetric(unsigned degree);
  static GroupSpec quaternion8();
  static GroupSpec direct_product(GroupSpec left, GroupSpec right);

  // Grammar: C<n> | D<2n> | S<n> | Q8, joined by 'x' for direct products
  // (left-associated), e.g. "S3xC2". Throws std::invalid_argument.
  static GroupSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  unsigned parameter() const noexcept { return parameter_; }
  const GroupSpec& left() const { return *left_; }
  const GroupSpec& right() const { return *right_; }

  std::size_t order() const;
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.to_string() == b.to_string();
  }

 private:
  GroupSpec(Kind kind, unsigned parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_ = Kind::Cyclic;
  unsigned parameter_ = 1;
  std::shared_ptr<const GroupSpec> left_;
  std::shared_ptr<const GroupSpec> right_;
};

// A Cayley table validated as a group with neutral element 0. Immutable.
class Group {
 public:
  const CayleyTable& table() const noexcept { return table_; }
  std::size_t order() const noexcept { return table_.order(); }

  Element mul(Element a, Element b) const noexcept { return table_(a, b); }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  const std::vector<Element>& inverses() const noexcept { return inverse_; }

  bool is_abelian() const noexcept { return abelian_; }
  bool is_elementary_abelian_2() const noexcept { return elementary_2_; }
  const std::vector<Element>& center() const noexcept { return center_; }
  std::size_t center_index() const noexcept { return order() / center_.size(); }

  // x*x*y == y*x*x for all x, y; equivalently every square is central.
  bool squares_central() const noexcept { return squares_central_; }

  // Present when the group came from build_group.
  const std::optional<GroupSpec>& spec() const noexcept { return spec_; }
  std::string label() const;

 private:
  friend Group validate_group(CayleyTable table);
  friend Group build_group(const GroupSpec& spec);

  explicit Group(CayleyTable table);

  CayleyTable table_;
  std::vector<Element> inverse_;
  std::vector<Element> center_;
  bool abelian_ = true;
  bool elementary_2_ = true;
  bool squares_central_ = true;
  std::optional<GroupSpec> spec_;
};

// Throws GroupValidationError carrying a witness: (a, b, c) for
// non-associativity, the offending element for a missing inverse, and an empty
// witness when 0 is not two-sided neutral.
Group validate_group(CayleyTable table);

// Throws std::invalid_argument for unsupported parameters.
Group build_group(const GroupSpec& spec);

// True iff the pair satisfies the standing hypotheses of the doubling
// classification: |G| > 1 and G not an elementary abelian 2-group.
inline bool satisfies_doubling_hypotheses(const Group& g) {
  return g.order() > 1 && !g.is_elementary_abelian_2();
}

}  // namespace chein
