#include <gtest/gtest.h>

#include <random>

#include "qf/constructions.hpp"
#include "qf/freealg.hpp"
#include "random_structures.hpp"

using namespace qf;

using testgen::random_element;
using testgen::random_presentation;

namespace {

  QuandleWord parse(std::string const& s) {
    return parse_quandle_word(s);
  }

}  // namespace

TEST(FreeRack, Axioms) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    auto const p = random_element(rng, 3, 3), q = random_element(rng, 3, 3), r = random_element(rng, 3, 3);
    ASSERT_EQ(fr_op(fr_op(p, q), r), fr_op(fr_op(p, r), fr_op(q, r)));
    ASSERT_EQ(fr_op_inv(fr_op(p, q), q), p);
    ASSERT_EQ(fr_op(fr_op_inv(p, q), q), p);
  }
}

TEST(FreeQuandle, Axioms) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    auto const p = fq_canonicalize(random_element(rng, 3, 3));
    auto const q = fq_canonicalize(random_element(rng, 3, 3));
    auto const r = fq_canonicalize(random_element(rng, 3, 3));
    ASSERT_EQ(fq_op(p, p), p);
    ASSERT_EQ(fq_op(fq_op(p, q), r), fq_op(fq_op(p, r), fq_op(q, r)));
    ASSERT_EQ(fq_op_inv(fq_op(p, q), q), p);
  }
}

TEST(FreeQuandle, Counts) {
  // per base: 1 + 2 + 2*3 + ... words not starting with the base letter
  EXPECT_EQ(free_quandle_elements(2, 0).size(), 2u);
  EXPECT_EQ(free_quandle_elements(2, 1).size(), 6u);
  EXPECT_EQ(free_quandle_elements(2, 2).size(), 18u);
  EXPECT_EQ(free_quandle_elements(2, 3).size(), 54u);
  EXPECT_EQ(free_quandle_elements(1, 5).size(), 1u);
  EXPECT_EQ(free_quandle_elements(3, 2).size(), 3u * (1 + 4 + 4 * 5));
}

TEST(FreeQuandle, Canonical) {
  FreeRackElement const p{0, {{0, 1}, {1, 1}, {0, -1}}};
  EXPECT_EQ(fq_canonicalize(p), (FreeRackElement{0, {{1, 1}, {0, -1}}}));
  EXPECT_TRUE(fq_equal({0, {{0, 1}}}, {0, {}}));
  EXPECT_FALSE(fq_equal({0, {{1, 1}}}, {0, {}}));
  EXPECT_EQ(fr_to_string({0, {{1, -1}}}, {"x", "y"}), "(x, y^-1)");
}

TEST(FreeProduct, NormalForm) {
  FreeProduct const F(cyclic_group(2), cyclic_group(3));
  auto const        w = F.normalize({{0, 1}, {0, 1}, {1, 1}, {1, 2}});
  EXPECT_TRUE(w.empty());
  auto const u = F.normalize({{0, 1}, {1, 1}});
  EXPECT_TRUE(F.nf_mult(u, F.nf_inv(u)).empty());
  EXPECT_EQ(F.to_string(u), "g:1 h:1");
  EXPECT_TRUE(F.in_factor_centralizer({{1, 2}}, 1, 1));
  EXPECT_FALSE(F.in_factor_centralizer({{0, 1}}, 1, 1));
}

TEST(GAFree, BasicOperations) {
  auto const Q = ga_free(cyclic_group(2), cyclic_group(2), {{0, 1}, {1, 1}});
  auto const a = Q.element(0, {}), b = Q.element(1, {});
  EXPECT_TRUE(Q.equal(Q.op(a, a), a));
  EXPECT_EQ(Q.to_string(Q.op(a, b)), "(g:1, h:1)");
  EXPECT_TRUE(Q.equal(Q.op_inv(Q.op(a, b), b), a));
  EXPECT_THROW(ga_free(cyclic_group(2), cyclic_group(2), {{0, 0}}), identity_base_element);
  EXPECT_THROW(ga_free(cyclic_group(2), cyclic_group(2), {{0, 1}, {0, 1}}), duplicate_base_element);
}

TEST(GAFree, OrbitGrowsLinearlyForInvolutions) {
  // Z2 * Z2 is infinite dihedral; each step reaches one new element per side
  auto const Q     = ga_free(cyclic_group(2), cyclic_group(2), {{0, 1}, {1, 1}});
  auto const start = Q.element(0, {});
  std::vector<std::size_t> sizes;
  for (std::size_t d = 0; d <= 4; ++d) {
    sizes.push_back(Q.orbit_of(start, d).size());
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 4, 7, 10, 13}));
}

TEST(GAFree, QuandleAxiomsOnRandomElements) {
  auto const   Q = ga_free(cyclic_group(3), cyclic_group(4), {{0, 1}, {1, 1}, {1, 2}});
  std::mt19937 rng(9);
  auto         rnd = [&] {
    FreeProductWord w;
    for (std::size_t i = 0, len = rng() % 4; i < len; ++i) {
      int const f = static_cast<int>(rng() % 2);
      w.push_back({f, rng() % Q.product().factor(f).order()});
    }
    return Q.element(rng() % 3, w);
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto const p = rnd(), q = rnd(), r = rnd();
    ASSERT_TRUE(Q.equal(Q.op(p, p), p));
    ASSERT_TRUE(Q.equal(Q.op(Q.op(p, q), r), Q.op(Q.op(p, r), Q.op(q, r))));
    ASSERT_TRUE(Q.equal(Q.op_inv(Q.op(p, q), q), p));
  }
}

TEST(QuandleWord, ParseAndPrint) {
  auto const w = parse("(op x (opinv y x))");
  EXPECT_EQ(to_string(w), "(op x (opinv y x))");
  EXPECT_EQ(w.depth(), 2u);
  EXPECT_THROW(parse("(op x)"), invalid_argument);
  EXPECT_THROW(parse("(foo x y)"), invalid_argument);
  EXPECT_THROW(parse("(op x y"), invalid_argument);
}

TEST(Presentation, ValidationAndRenaming) {
  QuandlePresentation P{{"x", "x"}, {}};
  EXPECT_THROW(P.validate(), name_clash);
  QuandlePresentation A{{"x", "y"}, {{parse("(op x y)"), parse("x")}}};
  auto const          F = presentation_free_product(A, A);
  EXPECT_EQ(F.generators, (std::vector<std::string>{"x", "y", "x_2", "y_2"}));
  EXPECT_EQ(to_string(F.relations[1].first), "(op x_2 y_2)");
}

TEST(Presentation, OfFiniteQuandle) {
  auto const P = quandle_presentation_of(dihedral_quandle(3));
  EXPECT_EQ(P.generators, (std::vector<std::string>{"e0", "e1", "e2"}));
  EXPECT_EQ(P.relations.size(), 9u);
  auto const U = quandle_presentation_of(u_quandle(1, 2));
  EXPECT_EQ(U.generators.front(), "x0");
}

TEST(Presentation, EnvelopeOfFreeProductIsDisjointUnion) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto const P1 = random_presentation(rng);
    auto const P2 = random_presentation(rng);
    EXPECT_TRUE(same_structure(envelope_of(presentation_free_product(P1, P2)),
                               disjoint_union(envelope_of(P1), envelope_of(P2))));
  }
}

TEST(Closure, FreeQuandleMatchesEnumeration) {
  QuandlePresentation const F2{{"x", "y"}, {}};
  for (std::size_t d = 0; d <= 3; ++d) {
    auto const e = bounded_closure(F2, d);
    EXPECT_TRUE(e.exact());
    EXPECT_EQ(e.upper_bound, free_quandle_elements(2, d).size()) << d;
  }
  auto const one = bounded_closure(QuandlePresentation{{"x"}, {}}, 3);
  EXPECT_EQ(one.upper_bound, 1u);
}

TEST(Closure, FinitePresentations) {
  auto const R3 = quandle_presentation_of(dihedral_quandle(3));
  auto const e  = bounded_closure(R3, 2);
  EXPECT_EQ(e.lower_bound, 3u);
  EXPECT_EQ(e.upper_bound, 3u);

  // x*y = x, y*x = y: the trivial quandle on two generators
  QuandlePresentation const T{{"x", "y"}, {{parse("(op x y)"), parse("x")}, {parse("(op y x)"), parse("y")}}};
  auto const                t = bounded_closure(T, 3);
  EXPECT_EQ(t.upper_bound, 2u);
  EXPECT_TRUE(t.exact());
  EXPECT_THROW(bounded_closure(T, max_closure_depth + 1), depth_exceeded);
}
