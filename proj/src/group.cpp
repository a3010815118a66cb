#include "chein/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chein/errors.hpp"

namespace chein {

GroupSpec GroupSpec::cyclic(unsigned order) {
  if (order == 0 || order > kMaxOrder) {
    throw std::invalid_argument("cyclic group order must be in [1, " +
                                std::to_string(kMaxOrder) + "]");
  }
  return {Kind::Cyclic, order};
}

GroupSpec GroupSpec::dihedral(unsigned order) {
  if (order == 0 || order % 2 != 0 || order > kMaxOrder) {
    throw std::invalid_argument("dihedral group order must be even and in [2, " +
                                std::to_string(kMaxOrder) + "]");
  }
  return {Kind::Dihedral, order};
}

GroupSpec GroupSpec::symmetric(unsigned degree) {
  if (degree == 0 || degree > kMaxSymmetricDegree) {
    throw std::invalid_argument("symmetric group degree must be in [1, " +
                                std::to_string(kMaxSymmetricDegree) + "]");
  }
  return {Kind::Symmetric, degree};
}

GroupSpec GroupSpec::quaternion8() { return {Kind::Quaternion8, 8}; }

GroupSpec GroupSpec::direct_product(GroupSpec left, GroupSpec right) {
  if (left.order() * right.order() > kMaxOrder) {
    throw std::invalid_argument("direct product order exceeds " +
                                std::to_string(kMaxOrder));
  }
  GroupSpec spec(Kind::DirectProduct, 0);
  spec.left_ = std::make_shared<const GroupSpec>(std::move(left));
  spec.right_ = std::make_shared<const GroupSpec>(std::move(right));
  return spec;
}

namespace {

GroupSpec parse_factor(std::string_view text) {
  auto fail = [&] {
    return std::invalid_argument("bad group spec factor '" + std::string(text) +
                                 "' (expected C<n>, D<2n>, S<n> or Q8)");
  };
  if (text.size() < 2) throw fail();
  const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::string_view digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 6) {
    throw fail();
  }
  const auto value = static_cast<unsigned>(std::stoul(std::string(digits)));
  switch (kind) {
    case 'C': return GroupSpec::cyclic(value);
    case 'D': return GroupSpec::dihedral(value);
    case 'S': return GroupSpec::symmetric(value);
    case 'Q':
      if (value != 8) throw fail();
      return GroupSpec::quaternion8();
    default: throw fail();
  }
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  std::optional<GroupSpec> result;
  std::size_t start = 0;
  while (true) {
    const std::size_t cut = text.find('x', start);
    std::string_view part = text.substr(start, cut == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : cut - start);
    GroupSpec factor = parse_factor(part);
    result = result ? direct_product(std::move(*result), std::move(factor))
                    : std::move(factor);
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return *result;
}

std::size_t GroupSpec::order() const {
  switch (kind_) {
    case Kind::Cyclic:
    case Kind::Dihedral:
    case Kind::Quaternion8: return parameter_;
    case Kind::Symmetric: {
      std::size_t f = 1;
      for (unsigned i = 2; i <= parameter_; ++i) f *= i;
      return f;
    }
    case Kind::DirectProduct: return left_->order() * right_->order();
  }
  return 0;
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case Kind::Cyclic: return "C" + std::to_string(parameter_);
    case Kind::Dihedral: return "D" + std::to_string(parameter_);
    case Kind::Symmetric: return "S" + std::to_string(parameter_);
    case Kind::Quaternion8: return "Q8";
    case Kind::DirectProduct: return left_->to_string() + "x" + right_->to_string();
  }
  return {};
}

Group::Group(CayleyTable table) : table_(std::move(table)) {
  const auto n = static_cast<Element>(table_.order());
  inverse_.resize(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (table_(x, y) == 0) {
        inverse_[x] = y;
        break;
      }
    }
  }
  for (Element z = 0; z < n; ++z) {
    bool central = true;
    for (Element x = 0; x < n && central; ++x) central = table_(z, x) == table_(x, z);
    if (central) center_.push_back(z);
  }
  abelian_ = center_.size() == n;
  bool involutive = true;
  for (Element x = 0; x < n; ++x) {
    if (table_(x, x) != 0) involutive = false;
  }
  elementary_2_ = abelian_ && involutive;
  for (Element x = 0; x < n && squares_central_; ++x) {
    const Element sq = table_(x, x);
    squares_central_ = std::binary_search(center_.begin(), center_.end(), sq);
  }
}

std::string Group::label() const {
  return spec_ ? spec_->to_string() : "table";
}

Group validate_group(CayleyTable table) {
  using Reason = GroupValidationError::Reason;
  const auto n = static_cast<Element>(table.order());
  if (n == 0) throw GroupValidationError(Reason::NoIdentity, {}, "empty table");
  for (Element x = 0; x < n; ++x) {
    if (table(0, x) != x || table(x, 0) != x) {
      throw GroupValidationError(Reason::NoIdentity, {x},
                                 "element 0 is not a two-sided neutral element");
    }
  }
  if (auto triple = find_nonassociative_triple(table)) {
    const auto [a, b, c] = *triple;
    throw GroupValidationError(
        Reason::NotAssociative, {a, b, c},
        "not associative: (" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
            std::to_string(c) + " != " + std::to_string(a) + "*(" +
            std::to_string(b) + "*" + std::to_string(c) + ")");
  }
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      found = table(x, y) == 0 && table(y, x) == 0;
    }
    if (!found) {
      throw GroupValidationError(Reason::MissingInverse, {x},
                                 "element " + std::to_string(x) +
                                     " has no two-sided inverse");
    }
  }
  return Group(std::move(table));
}

namespace {

CayleyTable cyclic_table(std::size_t m) {
  CayleyTable t(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t.set(static_cast<Element>(a), static_cast<Element>(b),
            static_cast<Element>((a + b) % m));
    }
  }
  return t;
}

// Element (s, k) acts on Z_m as x -> (-1)^s x + k; index s * m + k. The
// product a*b is the composite "b first, then a".
CayleyTable dihedral_table(std::size_t order) {
  const long m = static_cast<long>(order / 2);
  CayleyTable t(order);
  for (long a = 0; a < 2 * m; ++a) {
    for (long b = 0; b < 2 * m; ++b) {
      const long s1 = a / m, k1 = a % m, s2 = b / m, k2 = b % m;
      const long sign1 = s1 ? -1 : 1;
      const long s = (s1 + s2) % 2;
      const long k = (((sign1 * k2 + k1) % m) + m) % m;
      t.set(static_cast<Element>(a), static_cast<Element>(b),
            static_cast<Element>(s * m + k));
    }
  }
  return t;
}

// Permutations in lexicographic one-line order; (p*q)(i) = p(q(i)).
CayleyTable symmetric_table(unsigned degree) {
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<unsigned>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], static_cast<Element>(i));
  }
  CayleyTable t(perms.size());
  std::vector<unsigned> product(degree);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (unsigned i = 0; i < degree; ++i) product[i] = perms[a][perms[b][i]];
      t.set(static_cast<Element>(a), static_cast<Element>(b), index.at(product));
    }
  }
  return t;
}

// 1, -1, i, -i, j, -j, k, -k: index 2 * unit + (negative ? 1 : 0).
CayleyTable quaternion_table() {
  // unit products as (sign, unit) over units 1, i, j, k
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnits = {{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  CayleyTable t(8);
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      const auto [sign, unit] = kUnits[a / 2][b / 2];
      const int total = sign * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      t.set(a, b, static_cast<Element>(2 * unit + (total < 0 ? 1 : 0)));
    }
  }
  return t;
}

CayleyTable direct_product_table(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  CayleyTable t(na * nb);
  for (Element a1 = 0; a1 < na; ++a1) {
    for (Element b1 = 0; b1 < nb; ++b1) {
      for (Element a2 = 0; a2 < na; ++a2) {
        for (Element b2 = 0; b2 < nb; ++b2) {
          t.set(static_cast<Element>(a1 * nb + b1), static_cast<Element>(a2 * nb + b2),
                static_cast<Element>(a(a1, a2) * nb + b(b1, b2)));
        }
      }
    }
  }
  return t;
}

CayleyTable table_for(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupSpec::Kind::Cyclic: return cyclic_table(spec.parameter());
    case GroupSpec::Kind::Dihedral: return dihedral_table(spec.parameter());
    case GroupSpec::Kind::Symmetric: return symmetric_table(spec.parameter());
    case GroupSpec::Kind::Quaternion8: return quaternion_table();
    case GroupSpec::Kind::DirectProduct:
      return direct_product_table(table_for(spec.left()), table_for(spec.right()));
  }
  throw std::logic_error("unknown group kind");
}

}  // namespace

Group build_group(const GroupSpec& spec) {
  Group g = validate_group(table_for(spec));
  g.spec_ = spec;
  return g;
}

}  // namespace chein
