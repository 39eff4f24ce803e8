#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qf/fingroup.hpp"
#include "qf/permutation.hpp"

using namespace qf;

namespace {

  void expect_group_axioms(FiniteGroup const& G) {
    auto const e = G.identity();
    for (std::size_t a = 0; a < G.order(); ++a) {
      EXPECT_EQ(G.mul(a, e), a);
      EXPECT_EQ(G.mul(e, a), a);
      EXPECT_EQ(G.mul(a, G.inv(a)), e);
      for (std::size_t b = 0; b < G.order(); ++b) {
        for (std::size_t c = 0; c < G.order(); ++c) {
          ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
        }
      }
    }
  }

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), invalid_argument);
  EXPECT_THROW(Permutation({0, 3}), invalid_argument);
  EXPECT_NO_THROW(Permutation({2, 0, 1}));
}

TEST(Permutation, ComposesLeftToRight) {
  Permutation const p({1, 2, 0});
  Permutation const q({1, 0, 2});
  auto const        pq = p * q;
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(pq(i), q(p(i)));
  }
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(Permutation::cycle(5).cycle_type(), std::vector<std::size_t>{5});
}

TEST(FiniteGroup, ConstructorsSatisfyAxioms) {
  for (std::size_t k = 1; k <= 8; ++k) {
    expect_group_axioms(cyclic_group(k));
  }
  for (std::size_t k = 1; k <= 6; ++k) {
    expect_group_axioms(dihedral_group(k));
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    expect_group_axioms(symmetric_group(k));
  }
  expect_group_axioms(affine_group(5));
  expect_group_axioms(abelian_group({2, 4}));
  expect_group_axioms(direct_product(cyclic_group(2), dihedral_group(3)));
}

TEST(FiniteGroup, RejectsBadTables) {
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {0, 1}}), invalid_argument);
  EXPECT_THROW(FiniteGroup::from_table({{0, 2}, {1, 0}}), invalid_argument);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}}), invalid_argument);
  EXPECT_THROW(FiniteGroup::from_table({}), invalid_argument);
}

TEST(FiniteGroup, Orders) {
  EXPECT_EQ(dihedral_group(5).order(), 10u);
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_EQ(affine_group(7).order(), 42u);
  EXPECT_EQ(parse_group_spec("S3xZ4").order(), 24u);
  EXPECT_EQ(parse_group_spec("D4").order(), 8u);
  EXPECT_THROW(parse_group_spec("Q8"), invalid_argument);
  EXPECT_THROW(parse_group_spec(""), invalid_argument);
}

TEST(FiniteGroup, DihedralLayout) {
  auto const G = dihedral_group(4);
  // r^i for i < k, s r^i after; every s r^i is an involution
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(G.mul(4 + i, 4 + i), G.identity());
  }
  EXPECT_EQ(element_order(G, 1), 4u);
  EXPECT_FALSE(G.is_abelian());
}

TEST(FiniteGroup, SymmetricLabels) {
  auto const G = symmetric_group(3);
  std::vector<std::string> const expected{"()", "(2,3)", "(1,2)", "(1,2,3)", "(1,3,2)", "(1,3)"};
  EXPECT_EQ(G.labels(), expected);
}

TEST(FiniteGroup, ConjugacyClassesPartitionTheGroup) {
  for (auto const& G : {symmetric_group(4), dihedral_group(5), dihedral_group(6), affine_group(5)}) {
    auto const               classes = conjugacy_classes(G);
    std::vector<std::size_t> all;
    for (auto const& c : classes) {
      EXPECT_EQ(G.order() % c.size(), 0u);
      EXPECT_EQ(c.size() * centralizer(G, c.front()).size(), G.order());
      all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expected(G.order());
    std::iota(expected.begin(), expected.end(), 0);
    EXPECT_EQ(all, expected);
  }
  EXPECT_EQ(conjugacy_classes(symmetric_group(4)).size(), 5u);
  EXPECT_EQ(conjugacy_classes(dihedral_group(4)).size(), 5u);
}

TEST(FiniteGroup, GeneratedSubgroups) {
  auto const G = symmetric_group(3);
  EXPECT_EQ(generated_subgroup(G, {1}).size(), 2u);
  EXPECT_EQ(generated_subgroup(G, {3}).size(), 3u);
  EXPECT_TRUE(generates(G, {1, 2}));
  EXPECT_FALSE(generates(G, {3}));
}

TEST(FiniteGroup, CommutatorAndPower) {
  auto const G = symmetric_group(3);
  for (std::size_t a = 0; a < G.order(); ++a) {
    for (std::size_t b = 0; b < G.order(); ++b) {
      auto const expected = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
      EXPECT_EQ(commutator(G, a, b), expected);
      EXPECT_EQ(conjugate(G, a, b), G.mul(G.mul(G.inv(b), a), b));
    }
    EXPECT_EQ(power(G, a, -1), G.inv(a));
    EXPECT_EQ(power(G, a, 0), G.identity());
  }
}

TEST(HeisenbergModel, OrdersAndRelations) {
  struct Case {
    std::size_t n, m, order;
  };
  for (auto [n, m, order] : {Case{2, 2, 32}, Case{2, 4, 128}, Case{1, 3, 9}, Case{3, 3, 243}}) {
    auto const  H = make_heisenberg_model(n, m);
    auto const& G = H.group;
    EXPECT_EQ(G.order(), order) << n << "," << m;
    auto const c = commutator(G, H.x0, H.y0);
    EXPECT_EQ(commutator(G, H.x0, c), G.identity());
    EXPECT_EQ(commutator(G, H.y0, c), G.identity());
    EXPECT_EQ(power(G, c, static_cast<long long>(n)), G.identity());
    EXPECT_EQ(power(G, c, static_cast<long long>(m)), G.identity());
    EXPECT_EQ(G.is_abelian(), std::gcd(n, m) == 1);
  }
}
