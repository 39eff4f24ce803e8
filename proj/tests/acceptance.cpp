// Runs the fourteen acceptance checks and prints one PASS/FAIL line each.
// Exit status is the number of failed checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qf/qf.hpp"
#include "random_structures.hpp"

using namespace qf;

namespace {

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  using Check = std::function<Outcome()>;

  std::string frac(std::size_t ok, std::size_t total) {
    return std::to_string(ok) + "/" + std::to_string(total);
  }

  bool axioms_hold(FiniteQuandle const& Q) {
    return !check_axioms(Q.table()) && oracle::is_quandle(Q.table());
  }

  std::size_t label(FiniteGroup const& G, std::string const& s) {
    return G.find_label(s).value();
  }

  // Every group the library can build of order <= 12.
  std::vector<FiniteGroup> small_groups() {
    std::vector<FiniteGroup> gs;
    for (std::size_t k = 1; k <= 12; ++k) {
      gs.push_back(cyclic_group(k));
    }
    for (std::size_t k = 2; k <= 6; ++k) {
      gs.push_back(dihedral_group(k));
    }
    gs.push_back(symmetric_group(3));
    gs.push_back(affine_group(3));
    gs.push_back(affine_group(4));
    for (auto const& f : std::vector<std::vector<std::size_t>>{{2, 2}, {2, 4}, {2, 2, 2}, {3, 3}, {2, 6}}) {
      gs.push_back(abelian_group(f));
    }
    gs.push_back(direct_product(cyclic_group(2), symmetric_group(3)));
    return gs;
  }

  // 1. every constructor, every parameter set of order <= 12
  Outcome axiom_suite() {
    std::size_t total = 0, ok = 0;
    auto        test = [&](FiniteQuandle const& Q) {
      if (Q.order() <= 12) {
        ++total;
        ok += axioms_hold(Q);
      }
    };
    std::vector<FiniteQuandle> pool;
    for (std::size_t n = 1; n <= 12; ++n) {
      test(trivial_quandle(n));
      test(dihedral_quandle(n));
      pool.push_back(dihedral_quandle(n));
    }
    auto const groups = small_groups();
    for (auto const& G : groups) {
      if (G.is_abelian()) {
        test(takasaki(G));
      }
      test(conj(G));
      test(conj_inv(G));
      test(core(G));
    }
    for (std::size_t n = 1; n <= 11; ++n) {
      for (std::size_t m = 1; n + m <= 12; ++m) {
        test(u_quandle(n, m));
        // U(n,m) with both cycles reversed is another union
        std::vector<Permutation> sigma(n, Permutation::cycle(m).inverse());
        std::vector<Permutation> tau(m, Permutation::cycle(n).inverse());
        test(quandle_union(trivial_quandle(n), trivial_quandle(m), sigma, tau));
      }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
      // R_n with the trivial action on a point and vice versa
      std::vector<Permutation> sigma(n, Permutation::identity(1));
      std::vector<Permutation> tau(1, Permutation::identity(n));
      test(quandle_union(dihedral_quandle(n), trivial_quandle(1), sigma, tau));
    }
    for (auto const& G : groups) {
      for (std::size_t a = 0; a < G.order(); ++a) {
        test(ga_quandle(G, {a}).quandle());
        for (std::size_t b = a + 1; b < G.order(); ++b) {
          if (G.order() <= 8) {
            test(ga_quandle(G, {a, b}).quandle());
          }
        }
      }
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (pool[i].order() * pool[j].order() <= 12) {
          test(direct_product(pool[i], pool[j]));
        }
      }
    }
    return {ok == total, frac(ok, total) + " tables pass r1, r2, q1"};
  }

  // 2. R_2n splits into even and odd halves, each isomorphic to R_n
  Outcome dihedral_decomposition() {
    std::size_t ok = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
      auto const               Q = dihedral_quandle(2 * n);
      auto const               o = orbits(Q);
      std::vector<std::size_t> even, odd;
      for (std::size_t i = 0; i < 2 * n; ++i) {
        (i % 2 ? odd : even).push_back(i);
      }
      bool good = o == Partition{even, odd};
      for (auto const& half : {even, odd}) {
        auto const w = is_isomorphic(subquandle(Q, half), dihedral_quandle(n));
        good         = good && w && is_isomorphism(subquandle(Q, half), dihedral_quandle(n), *w);
      }
      ok += good;
    }
    return {ok == 7, frac(ok, 7) + " instances n = 2..8"};
  }

  // 3. two-orbit quandles of order <= 5
  Outcome scan() {
    auto const  r = abenvel_scan(5);
    using P       = std::pair<std::size_t, std::size_t>;
    std::set<P> coprime_ok, expected_coprime{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}};
    std::size_t gcd_hits = 0, gcd_certified = 0, abelian_ok = 0;
    for (auto const& e : r.entries) {
      abelian_ok += e.abelian.is_free_abelian(2);
      if (!e.u) {
        continue;
      }
      if (e.gcd == 1) {
        if (e.verdict == ScanVerdict::no_quotient_found) {
          coprime_ok.insert({e.u->n, e.u->m});
        }
      } else {
        ++gcd_hits;
        gcd_certified += e.verdict == ScanVerdict::certified_not_z2 && e.quotient_group.rfind("H(", 0) == 0;
      }
    }
    std::size_t expected_entries = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
      expected_entries += enumerate_quandles(n, {2, std::nullopt}).size();
    }
    bool const pass = coprime_ok == expected_coprime && gcd_hits > 0 && gcd_hits == gcd_certified
                   && abelian_ok == r.entries.size() && r.entries.size() == expected_entries
                   && r.contradictions == 0 && r.unresolved == 0;
    return {pass, std::to_string(r.entries.size()) + " quandles, coprime U " + frac(coprime_ok.size(), 5)
                      + ", gcd>1 certified " + frac(gcd_certified, gcd_hits) + ", contradictions "
                      + std::to_string(r.contradictions)};
  }

  // 4. U(n,m) in the finite model
  Outcome u_reduction() {
    std::size_t ok = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t m = 1; m <= 6; ++m) {
        ok += verify_u_reduction(n, m).passed();
      }
    }
    return {ok == 36, frac(ok, 36) + " pairs 1 <= n,m <= 6"};
  }

  // 5. R_2n presentation in dihedral 2n
  Outcome r2n() {
    std::size_t ok = 0, rel = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      auto const r = verify_r2n(n);
      ok += r.passed();
      rel += r.conjugation_relators_ok;
    }
    return {ok == 6, frac(ok, 6) + " n = 1..6, " + std::to_string(rel) + " conjugation relators"};
  }

  // 6. reconstruction from certificates into dihedral groups
  Outcome reconstruction() {
    std::size_t ok = 0, total = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      ++total;
      auto const  Q   = dihedral_quandle(2 * n);
      auto const  asg = r2n_assignment(n);
      auto const  c   = injectivity_certificate(Q, asg);
      auto const  r   = reconstruct_check(Q, c);
      // base is {s, s r}: two adjacent reflections
      bool const adjacent = r.A == std::vector<std::size_t>{2 * n, 2 * n + 1};
      ok += r.isomorphic && adjacent;
    }
    for (std::size_t n : {3, 5, 7, 9}) {
      ++total;
      auto const               Q = dihedral_quandle(n);
      std::vector<std::size_t> img;
      for (std::size_t i = 0; i < n; ++i) {
        img.push_back(n + i);
      }
      auto const c = injectivity_certificate(Q, {dihedral_group(n), img});
      auto const r = reconstruct_check(Q, c);
      ok += r.isomorphic && r.A.size() == 1;
    }
    return {ok == total, frac(ok, total) + " isomorphism witnesses"};
  }

  // 7. Q(G x H, A x B) = Q(G,A) x Q(H,B)
  Outcome direct_products() {
    struct Case {
      FiniteGroup              G, H;
      std::vector<std::size_t> A, B;
    };
    auto const        S3 = symmetric_group(3);
    std::vector<Case> cases{{S3, cyclic_group(4), {label(S3, "(1,2)")}, {1}},
                            {dihedral_group(3), dihedral_group(4), {3}, {4}},
                            {cyclic_group(2), cyclic_group(3), {1}, {1}}};
    std::size_t ok = 0;
    for (auto const& c : cases) {
      std::vector<std::size_t> AB;
      for (auto a : c.A) {
        for (auto b : c.B) {
          AB.push_back(a * c.H.order() + b);
        }
      }
      auto const lhs = ga_quandle(direct_product(c.G, c.H), AB).quandle();
      auto const rhs = direct_product(ga_quandle(c.G, c.A).quandle(), ga_quandle(c.H, c.B).quandle());
      auto const w   = is_isomorphic(lhs, rhs);
      ok += w && is_isomorphism(lhs, rhs, *w);
    }
    return {ok == 3, frac(ok, 3) + " products"};
  }

  // 8. class representatives give Conj(G)
  Outcome class_representatives() {
    std::size_t ok = 0;
    for (auto const& G : {symmetric_group(3), dihedral_group(4)}) {
      std::vector<std::size_t> reps;
      for (auto const& c : conjugacy_classes(G)) {
        reps.push_back(c.front());
      }
      ok += is_isomorphic(ga_quandle(G, reps).quandle(), conj(G)).has_value();
    }
    return {ok == 2, frac(ok, 2) + " groups"};
  }

  // 9. comparison with the class-union subquandle of Conj(S3)
  Outcome conjugation_comparison() {
    auto const G      = symmetric_group(3);
    auto const t      = label(G, "(1,2)");
    auto const good   = compare_with_ga(G, {t, label(G, "(1,2,3)")});
    auto const bad    = compare_with_ga(G, {t, label(G, "(1,3)")});
    bool const first  = good.isomorphic;
    bool const second = !bad.isomorphic && bad.ga_orbits == 2 && bad.sub_orbits == 1;
    return {first && second, frac(first + second, 2) + ", conjugate pair orbits " + std::to_string(bad.ga_orbits)
                                 + " vs " + std::to_string(bad.sub_orbits)};
  }

  // 10. the x*y = x => y*x = y gate
  Outcome obstruction_gate() {
    std::size_t ga_total = 0, ga_ok = 0;
    for (auto const& G : {symmetric_group(3), dihedral_group(4), dihedral_group(5), symmetric_group(4),
                          affine_group(5), cyclic_group(6)}) {
      for (std::size_t a = 1; a < G.order(); a += 2) {
        ++ga_total;
        ga_ok += predicates(ga_quandle(G, {a}).quandle()).ga_obstruction_pass;
        if (a + 1 < G.order()) {
          ++ga_total;
          ga_ok += predicates(ga_quandle(G, {a, a + 1}).quandle()).ga_obstruction_pass;
        }
      }
    }
    std::size_t u_ok = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
      u_ok += !predicates(u_quandle(1, n)).ga_obstruction_pass;
    }
    return {ga_total >= 20 && ga_ok == ga_total && u_ok == 4,
            "Q(G,A) pass " + frac(ga_ok, ga_total) + ", U(1,n) rejected " + frac(u_ok, 4)};
  }

  // 11. free quandles
  Outcome free_structures() {
    bool                      counts = true;
    QuandlePresentation const F2{{"x", "y"}, {}};
    for (std::size_t d = 0; d <= 2; ++d) {
      auto const e = bounded_closure(F2, d);
      counts       = counts && e.exact() && e.upper_bound == free_quandle_elements(2, d).size();
    }
    bool one = true;
    for (std::size_t d = 0; d <= 4; ++d) {
      one = one && free_quandle_elements(1, d).size() == 1
         && bounded_closure(QuandlePresentation{{"x"}, {}}, d).upper_bound == 1;
    }
    std::mt19937 rng(20240601);
    std::size_t  good = 0;
    for (int i = 0; i < 1000; ++i) {
      auto const p = testgen::random_element(rng, 3, 3), q = testgen::random_element(rng, 3, 3),
                 r = testgen::random_element(rng, 3, 3);
      bool const rack = fr_op(fr_op(p, q), r) == fr_op(fr_op(p, r), fr_op(q, r)) && fr_op_inv(fr_op(p, q), q) == p;
      auto const a = fq_canonicalize(p), b = fq_canonicalize(q), c = fq_canonicalize(r);
      bool const quandle = fq_op(a, a) == a && fq_op(fq_op(a, b), c) == fq_op(fq_op(a, c), fq_op(b, c))
                        && fq_op_inv(fq_op(a, b), b) == a;
      good += rack && quandle;
    }
    return {counts && one && good == 1000, std::string("FQ_2 vs closure ") + (counts ? "equal" : "differ")
                                               + ", FQ_1 " + (one ? "single" : "not single") + ", triples "
                                               + frac(good, 1000)};
  }

  // 12. envelope of a free product
  Outcome envelope_free_product() {
    std::mt19937 rng(424242);
    std::size_t  ok = 0;
    for (int i = 0; i < 10; ++i) {
      auto const P1 = testgen::random_presentation(rng);
      auto const P2 = testgen::random_presentation(rng);
      ok += same_structure(envelope_of(presentation_free_product(P1, P2)),
                           disjoint_union(envelope_of(P1), envelope_of(P2)));
    }
    return {ok == 10, frac(ok, 10) + " random pairs"};
  }

  // 13. enumeration
  Outcome enumeration() {
    bool        oracle_ok = true;
    std::string counts;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const found  = enumerate_quandles(n);
      auto const expect = oracle::all_quandles(n);
      oracle_ok         = oracle_ok && found.size() == expect.size();
      for (std::size_t i = 0; i < found.size() && oracle_ok; ++i) {
        for (std::size_t j = i + 1; j < found.size(); ++j) {
          oracle_ok = oracle_ok && !oracle::isomorphic(found[i].table(), found[j].table());
        }
      }
      counts += std::to_string(found.size()) + " ";
    }
    bool stable = true;
    for (std::size_t n : {5, 6}) {
      auto const a = enumerate_quandles(n);
      auto const b = enumerate_quandles(n);
      stable       = stable && a.size() == b.size();
      for (std::size_t i = 0; i < a.size() && stable; ++i) {
        stable = a[i] == b[i];
      }
      counts += std::to_string(a.size()) + " ";
    }
    counts.pop_back();
    return {oracle_ok && stable, "counts n = 1..6: " + counts};
  }

  // 14. latin or commutative corpus
  Outcome latin_corpus() {
    std::vector<FiniteQuandle> corpus{dihedral_quandle(3), dihedral_quandle(5), dihedral_quandle(7),
                                      dihedral_quandle(9), takasaki(abelian_group({3, 3}))};
    std::size_t                inj = 0, in_corpus = 0;
    for (auto const& Q : corpus) {
      auto const p = predicates(Q);
      in_corpus += p.is_latin || p.is_commutative;
      inj += inner_map_injective(Q);
    }
    bool const simple = is_simple(dihedral_quandle(3)) && is_simple(dihedral_quandle(5))
                     && !is_simple(dihedral_quandle(4));
    return {inj == 5 && in_corpus == 5 && simple,
            "injective " + frac(inj, 5) + ", simplicity " + (simple ? "as expected" : "wrong")};
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, Check>> const checks{
      {"axiom suite", axiom_suite},
      {"R_2n orbit decomposition", dihedral_decomposition},
      {"two-orbit scan to order 5", scan},
      {"U(n,m) model verification", u_reduction},
      {"R_2n presentation and certificate", r2n},
      {"dihedral reconstruction", reconstruction},
      {"direct products of Q(G,A)", direct_products},
      {"class representatives give Conj(G)", class_representatives},
      {"Q(G,A) vs conjugation subquandle", conjugation_comparison},
      {"(G,A) obstruction gate", obstruction_gate},
      {"free structures", free_structures},
      {"envelope of free product", envelope_free_product},
      {"enumeration", enumeration},
      {"latin and commutative corpus", latin_corpus},
  };
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = checks[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %-36s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, checks[i].first.c_str(),
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failed, checks.size());
  return failed;
}
