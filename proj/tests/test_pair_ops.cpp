#include <set>

#include "chein/group.hpp"
#include "chein/pair_ops.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chein;
using P = PairOp;

TEST_CASE("apply matches (x^i y^j)^k for every op on nonabelian groups") {
  for (const char* spec : {"S3", "D8", "Q8", "C4", "S3xC2"}) {
    CAPTURE(spec);
    const Group g = build_group(GroupSpec::parse(spec));
    for (PairOp op : kAllPairOps) {
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
          REQUIRE(apply(op, x, y, g) == oracle::pair_multiply(op, x, y, g.table()));
    }
  }
}

TEST_CASE("apply examples") {
  const Group s3 = build_group(GroupSpec::symmetric(3));
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) CHECK(apply(P::S, x, y, s3) == s3.mul(y, x));
    CHECK(apply(P::I, x, 0, s3) == x);
  }
  const Group c3 = build_group(GroupSpec::cyclic(3));
  CHECK(apply(P::ST3, 1, 1, c3) == 0);
  CHECK_THROWS_AS(apply(P::I, 3, 0, c3), std::out_of_range);
}

TEST_CASE("composition: dihedral relations") {
  CHECK(compose(P::S, P::S) == P::I);
  CHECK(compose(compose(P::S, P::T), P::S) == P::T3);
  CHECK(compose(P::T, P::T) == P::T2);
  CHECK(compose(P::T2, P::T) == P::T3);
  CHECK(compose(P::T3, P::T) == P::I);
  CHECK(compose(P::S, P::T) == P::ST);
  CHECK(compose(P::S, P::T2) == P::ST2);
  CHECK(compose(P::S, P::T3) == P::ST3);

  // <s, t> has exactly 8 elements and is nonabelian (D8, not C8 / C4xC2 / ...).
  std::set<PairOp> generated{P::I};
  bool grew = true;
  while (grew) {
    grew = false;
    for (PairOp a : std::set<PairOp>(generated))
      for (PairOp g : {P::S, P::T})
        grew |= generated.insert(compose(a, g)).second;
  }
  CHECK(generated.size() == 8);
  int involutions = 0;
  for (PairOp op : kAllPairOps) involutions += op != P::I && compose(op, op) == P::I;
  CHECK(involutions == 5);  // D8: four reflections plus the central rotation
  CHECK(compose(P::S, P::T) != compose(P::T, P::S));
  for (PairOp a : kAllPairOps)
    for (PairOp b : kAllPairOps)
      for (PairOp c : kAllPairOps)
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("compose agrees with the action on S3 (first, then)") {
  const Group s3 = build_group(GroupSpec::symmetric(3));
  auto transform = [&](PairOp op, Element x, Element y) {
    const PairAction& a = action_of(op);
    auto pick = [&](PairSlot s) {
      const Element v = s.source == 0 ? x : y;
      return s.inverted ? s3.inverse(v) : v;
    };
    return std::pair{pick(a.first), pick(a.second)};
  };
  for (PairOp f : kAllPairOps)
    for (PairOp g : kAllPairOps)
      for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y) {
          const auto [u, v] = transform(f, x, y);
          REQUIRE(apply(compose(f, g), x, y, s3) == apply(g, u, v, s3));
        }
}

TEST_CASE("the eight multiplications are pairwise distinct on nonabelian groups") {
  for (const char* spec : {"S3", "D8", "Q8", "D10"}) {
    CAPTURE(spec);
    const Group g = build_group(GroupSpec::parse(spec));
    std::set<std::vector<Element>> maps;
    for (PairOp op : kAllPairOps) {
      std::vector<Element> values;
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y) values.push_back(apply(op, x, y, g));
      maps.insert(values);
    }
    CHECK(maps.size() == 8);
  }
}

TEST_CASE("on an abelian group i and s multiply alike") {
  const Group c5 = build_group(GroupSpec::cyclic(5));
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) CHECK(apply(P::I, x, y, c5) == apply(P::S, x, y, c5));
}

TEST_CASE("named matrices") {
  CHECK(named_matrix(NamedMatrix::M_c) == OpMatrix{P::I, P::S, P::ST3, P::T});
  CHECK(named_matrix(NamedMatrix::op_M_c) == OpMatrix{P::S, P::T3, P::I, P::ST});
  CHECK(named_matrix(NamedMatrix::G_iota) == OpMatrix{P::I, P::I, P::I, P::I});
  CHECK(named_matrix(NamedMatrix::G_tau).to_string() == "i,t3,t,t2");
  CHECK(named_matrix(NamedMatrix::M_sigma).to_string() == "i,st,s,t3");
  CHECK(named_matrix(NamedMatrix::op_G_iota).to_string() == "s,s,s,s");
  CHECK(named_matrix(NamedMatrix::op_G_tau).to_string() == "s,st,st3,st2");
  CHECK(named_matrix(NamedMatrix::op_M_sigma).to_string() == "s,i,t,st3");
}

TEST_CASE("opposite_matrix") {
  using N = NamedMatrix;
  for (auto [x, op] : {std::pair{N::G_iota, N::op_G_iota}, std::pair{N::G_tau, N::op_G_tau},
                       std::pair{N::M_c, N::op_M_c}, std::pair{N::M_sigma, N::op_M_sigma}}) {
    CHECK(opposite_matrix(named_matrix(x)) == named_matrix(op));
  }
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const OpMatrix m = OpMatrix::from_index(i);
    REQUIRE(m.index() == i);
    REQUIRE(opposite_matrix(opposite_matrix(m)) == m);
  }
}

TEST_CASE("t_transform") {
  using N = NamedMatrix;
  CHECK(t_transform(named_matrix(N::G_iota)) == named_matrix(N::G_tau));
  CHECK(t_transform(named_matrix(N::M_c)) == named_matrix(N::M_sigma));
  for (std::size_t i = 0; i < OpMatrix::kCount; ++i) {
    const OpMatrix m = OpMatrix::from_index(i);
    REQUIRE(t_transform(m).alpha == m.alpha);
  }
}

TEST_CASE("textual names") {
  for (PairOp op : kAllPairOps) CHECK(parse_pair_op(name(op)) == op);
  CHECK(parse_pair_op("ST3") == P::ST3);
  CHECK(parse_pair_op(" T2 ") == P::T2);
  CHECK_THROWS_AS(parse_pair_op("u"), std::invalid_argument);

  CHECK(OpMatrix::parse("M_c") == named_matrix(NamedMatrix::M_c));
  CHECK(OpMatrix::parse("op_M_sigma") == named_matrix(NamedMatrix::op_M_sigma));
  CHECK(OpMatrix::parse("I,S,ST3,T") == named_matrix(NamedMatrix::M_c));
  for (const char* bad : {"i,s,st3", "i,s,st3,t,i", "i,,s,t", "m_c", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(OpMatrix::parse(bad), std::invalid_argument);
  }
  for (std::size_t i = 0; i < OpMatrix::kCount; i += 37) {
    const OpMatrix m = OpMatrix::from_index(i);
    CHECK(OpMatrix::parse(m.to_string()) == m);
  }
}
