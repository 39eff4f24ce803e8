#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qf/constructions.hpp"
#include "qf/ga.hpp"

using namespace qf;

namespace {

  std::size_t find(FiniteGroup const& G, std::string const& label) {
    auto i = G.find_label(label);
    if (!i) {
      throw std::runtime_error("no element " + label);
    }
    return *i;
  }

  // (a,u)*(b,v) = (a, u v^-1 b v), compared directly on group elements: the
  // products of representatives must land in the coset of the result.
  void expect_formula(GAQuandle const& QA) {
    auto const& G = QA.group();
    auto const& L = QA.element_labels();
    for (std::size_t i = 0; i < QA.order(); ++i) {
      for (std::size_t j = 0; j < QA.order(); ++j) {
        auto const [ka, u] = L[i];
        auto const [kb, v] = L[j];
        auto const w       = G.mul(G.mul(u, G.inv(v)), G.mul(QA.base()[kb], v));
        ASSERT_EQ(QA.quandle().op(i, j), QA.element_of(ka, w));
        ASSERT_EQ(QA.quandle().op_inv(i, j), QA.op_inv_formula(i, j));
      }
    }
  }

}  // namespace

TEST(GAQuandle, OrderIsSumOfClassSizes) {
  auto const G = symmetric_group(4);
  for (std::vector<std::size_t> A : {std::vector<std::size_t>{1}, {1, 3}, {1, 3, 9}}) {
    auto const  QA = ga_quandle(G, A);
    std::size_t expected = 0;
    for (auto a : A) {
      expected += G.order() / centralizer(G, a).size();
    }
    EXPECT_EQ(QA.order(), expected);
    EXPECT_TRUE(oracle::is_quandle(QA.quandle().table()));
    expect_formula(QA);
  }
}

TEST(GAQuandle, RejectsBadBase) {
  auto const G = symmetric_group(3);
  EXPECT_THROW(ga_quandle(G, {}), invalid_argument);
  EXPECT_THROW(ga_quandle(G, {1, 1}), duplicate_base_element);
  EXPECT_THROW(ga_quandle(G, {17}), invalid_argument);
}

TEST(GAQuandle, SingleTranspositionIsR3) {
  auto const G  = symmetric_group(3);
  auto const QA = ga_quandle(G, {find(G, "(1,2)")});
  EXPECT_EQ(QA.order(), 3u);
  EXPECT_TRUE(is_isomorphic(QA.quandle(), dihedral_quandle(3)));
}

TEST(GAQuandle, IotaIsAutomorphism) {
  auto const G  = dihedral_group(4);
  auto const QA = ga_quandle(G, {4, 5});
  for (std::size_t g = 0; g < G.order(); ++g) {
    auto const p = iota(QA, g);
    EXPECT_EQ(p.size(), QA.order());
  }
}

TEST(GAQuandle, Augmentation) {
  for (auto const& [G, A] : std::vector<std::pair<FiniteGroup, std::vector<std::size_t>>>{
           {symmetric_group(3), {1}}, {symmetric_group(3), {1, 3}}, {dihedral_group(5), {5, 1}},
           {symmetric_group(4), {1, 3}}, {cyclic_group(4), {1, 2}}}) {
    auto const r = augmentation_check(ga_quandle(G, A));
    EXPECT_TRUE(r.ok()) << r.diagnostics.size();
  }
}

TEST(GAQuandle, ConjugationMapIsHomomorphism) {
  auto const G  = symmetric_group(3);
  auto const QA = ga_quandle(G, {1, 3});
  auto const f  = conjugation_map(QA);
  auto const S  = class_union(G, QA.base());
  auto const C  = conj(G);
  for (std::size_t i = 0; i < QA.order(); ++i) {
    for (std::size_t j = 0; j < QA.order(); ++j) {
      EXPECT_EQ(S[f[QA.quandle().op(i, j)]], C.op(S[f[i]], S[f[j]]));
    }
  }
}

TEST(GAQuandle, ClassRepresentativesGiveConj) {
  for (auto const& G : {symmetric_group(3), dihedral_group(4)}) {
    std::vector<std::size_t> reps;
    for (auto const& c : conjugacy_classes(G)) {
      reps.push_back(c.front());
    }
    EXPECT_TRUE(is_isomorphic(ga_quandle(G, reps).quandle(), conj(G)));
  }
}

TEST(GAQuandle, CompareWithConjugationSubquandle) {
  auto const G = symmetric_group(3);
  auto const t = find(G, "(1,2)"), c = find(G, "(1,2,3)");
  auto const good = compare_with_ga(G, {t, c});
  EXPECT_TRUE(pairwise_non_conjugate(G, {t, c}));
  EXPECT_TRUE(good.isomorphic);

  auto const bad = compare_with_ga(G, {t, find(G, "(1,3)")});
  EXPECT_FALSE(pairwise_non_conjugate(G, {t, find(G, "(1,3)")}));
  EXPECT_FALSE(bad.isomorphic);
  EXPECT_EQ(bad.ga_orbits, 2u);
  EXPECT_EQ(bad.sub_orbits, 1u);
}

TEST(GAQuandle, DirectProductDecomposes) {
  auto const S3 = symmetric_group(3);
  auto const Z4 = cyclic_group(4);
  auto const G  = direct_product(S3, Z4);
  // (g,h) is numbered g*|H| + h
  auto const lhs = ga_quandle(G, {find(S3, "(1,2)") * 4 + 1});
  auto const rhs = direct_product(ga_quandle(S3, {find(S3, "(1,2)")}).quandle(), ga_quandle(Z4, {1}).quandle());
  EXPECT_TRUE(is_isomorphic(lhs.quandle(), rhs));
}

TEST(GAQuandle, ObstructionPasses) {
  for (auto const& G : {symmetric_group(3), dihedral_group(4), dihedral_group(5), symmetric_group(4)}) {
    for (std::size_t a = 1; a < G.order(); ++a) {
      EXPECT_TRUE(predicates(ga_quandle(G, {a}).quandle()).ga_obstruction_pass);
    }
  }
}
