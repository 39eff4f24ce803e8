#pragma once

// Enveloping groups as finite presentations, abelianization, evaluation in
// finite groups, and injectivity certificates for the natural map Q -> G_Q.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "fingroup.hpp"
#include "ga.hpp"
#include "quandle.hpp"
#include "smith.hpp"
#include "word.hpp"

namespace qf {

  struct GroupPresentation {
    std::size_t              num_generators = 0;
    std::vector<Word>        relators;
    std::vector<std::string> names;  // optional generator names

    bool operator==(GroupPresentation const&) const = default;
  };

  // One generator per element; relator y^{-1} x y (x*y)^{-1} for each pair.
  // Freely reduced; relators that reduce to the empty word (x = y, or
  // x*y = x with the pair commuting) are dropped unless keep_trivial.
  inline GroupPresentation presentation_of(FiniteQuandle const& Q, bool keep_trivial = false) {
    GroupPresentation P;
    P.num_generators = Q.order();
    P.names          = Q.names();
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = 0; y < Q.order(); ++y) {
        auto w = free_reduce({{y, -1}, {x, 1}, {y, 1}, {Q.op(x, y), -1}});
        if (!w.empty() || keep_trivial) {
          P.relators.push_back(std::move(w));
        }
      }
    }
    return P;
  }

  struct Abelianization {
    std::size_t          free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, in divisibility order

    bool is_free_abelian(std::size_t rank) const {
      return free_rank == rank && torsion.empty();
    }

    std::string describe() const {
      std::string s;
      for (auto const& t : torsion) {
        s += (s.empty() ? "" : " x ") + std::string("Z/") + t.str();
      }
      if (free_rank > 0) {
        s += (s.empty() ? "" : " x ") + std::string("Z");
        if (free_rank > 1) {
          s += "^" + std::to_string(free_rank);
        }
      }
      return s.empty() ? "1" : s;
    }
  };

  inline IntMatrix relation_matrix(GroupPresentation const& P) {
    IntMatrix M;
    for (auto const& r : P.relators) {
      auto                 sums = exponent_sums(r, P.num_generators);
      std::vector<Integer> row(sums.begin(), sums.end());
      M.push_back(std::move(row));
    }
    return M;
  }

  inline Abelianization abelianization(GroupPresentation const& P) {
    Abelianization out;
    auto const     M = relation_matrix(P);
    if (M.empty()) {
      out.free_rank = P.num_generators;
      return out;
    }
    auto const  snf  = smith_normal_form(M);
    std::size_t rank = 0;
    for (auto const& d : snf.diagonal) {
      if (d != 0) {
        ++rank;
        if (d > 1) {
          out.torsion.push_back(d);
        }
      }
    }
    out.free_rank = P.num_generators - rank;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation in finite groups
  ////////////////////////////////////////////////////////////////////////

  struct Assignment {
    FiniteGroup              group;
    std::vector<std::size_t> images;
  };

  inline std::size_t eval_word(FiniteGroup const& G, std::vector<std::size_t> const& images, Word const& w) {
    std::size_t acc = G.identity();
    for (auto const& l : w) {
      auto g = images.at(l.generator);
      acc    = G.mul(acc, l.exponent > 0 ? g : G.inv(g));
    }
    return acc;
  }

  // Index of the first relator not evaluating to the identity.
  inline std::optional<std::size_t> first_failing_relator(GroupPresentation const& P, Assignment const& asg) {
    if (asg.images.size() != P.num_generators) {
      throw invalid_argument("assignment has " + std::to_string(asg.images.size()) + " images for "
                             + std::to_string(P.num_generators) + " generators");
    }
    for (auto g : asg.images) {
      if (g >= asg.group.order()) {
        throw invalid_argument("assignment image out of range");
      }
    }
    for (std::size_t i = 0; i < P.relators.size(); ++i) {
      if (eval_word(asg.group, asg.images, P.relators[i]) != asg.group.identity()) {
        return i;
      }
    }
    return std::nullopt;
  }

  inline bool eval_assignment(GroupPresentation const& P, Assignment const& asg) {
    return !first_failing_relator(P, asg).has_value();
  }

  inline bool is_conj_homomorphism(FiniteQuandle const& Q, FiniteGroup const& G, std::vector<std::size_t> const& f) {
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = 0; y < Q.order(); ++y) {
        if (f[Q.op(x, y)] != conjugate(G, f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Injectivity certificates
  ////////////////////////////////////////////////////////////////////////

  // A homomorphism Q -> Conj(group) with pairwise distinct images. The
  // natural map Q -> G_Q factors through it, so it is injective too.
  struct Certificate {
    FiniteGroup              group;
    std::vector<std::size_t> images;
  };

  enum class CertificateFailure { relator, collision, not_hom };

  inline char const* certificate_failure_name(CertificateFailure r) {
    switch (r) {
      case CertificateFailure::relator: return "relator";
      case CertificateFailure::collision: return "collision";
      case CertificateFailure::not_hom: return "not_hom";
    }
    return "?";
  }

  class certificate_failed : public error {
   public:
    certificate_failed(CertificateFailure reason, std::string const& detail)
        : error(std::string("certificate failed (") + certificate_failure_name(reason) + "): " + detail),
          _reason(reason) {}

    CertificateFailure reason() const noexcept {
      return _reason;
    }

   private:
    CertificateFailure _reason;
  };

  inline Certificate injectivity_certificate(FiniteQuandle const& Q, Assignment const& asg) {
    auto const P = presentation_of(Q);
    if (auto bad = first_failing_relator(P, asg)) {
      throw certificate_failed(CertificateFailure::relator, word_to_string(P.relators[*bad], P.names));
    }
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = x + 1; y < Q.order(); ++y) {
        if (asg.images[x] == asg.images[y]) {
          throw certificate_failed(CertificateFailure::collision,
                                   "elements " + std::to_string(x) + " and " + std::to_string(y) + " share an image");
        }
      }
    }
    if (!is_conj_homomorphism(Q, asg.group, asg.images)) {
      throw certificate_failed(CertificateFailure::not_hom, "images do not respect the quandle operation");
    }
    return Certificate{asg.group, asg.images};
  }

  inline std::vector<FiniteGroup> default_catalog() {
    std::vector<FiniteGroup> c;
    for (std::size_t k = 2; k <= 24; ++k) {
      c.push_back(cyclic_group(k));
    }
    for (std::size_t k = 2; k <= 12; ++k) {
      c.push_back(dihedral_group(k));
    }
    for (std::size_t k = 3; k <= 4; ++k) {
      c.push_back(symmetric_group(k));
    }
    return c;
  }

  namespace detail {
    // Least element of each conjugacy class, as a mask.
    inline std::vector<char> class_minima_mask(FiniteGroup const& G) {
      std::vector<char> mask(G.order(), 0);
      for (auto const& cls : conjugacy_classes(G)) {
        mask[cls.front()] = 1;
      }
      return mask;
    }

    // Runs a map search Q -> Conj(G), charging nodes against `remaining`.
    // The image of element 0 is fixed up to conjugacy, which loses nothing:
    // conjugation is an automorphism of Conj(G).
    template <typename Visit>
    void search_conj_maps(FiniteQuandle const& Q, FiniteGroup const& G, bool injective, std::size_t& remaining,
                          Visit&& visit) {
      if (Q.order() == 0) {
        return;
      }
      auto const P = conj(G);
      MapSearch  s(Q, P, injective, remaining);
      // orbit representatives first: the rest mostly follow by propagation
      std::vector<std::size_t> order;
      std::vector<char>        is_rep(Q.order(), 0);
      for (auto const& b : orbits(Q)) {
        order.push_back(b.front());
        is_rep[b.front()] = 1;
      }
      for (std::size_t x = 0; x < Q.order(); ++x) {
        if (!is_rep[x]) {
          order.push_back(x);
        }
      }
      s.set_branch_order(std::move(order));
      s.restrict_images(0, class_minima_mask(G));
      try {
        s.run(visit);
      } catch (search_limit_exceeded const&) {
        throw budget_exhausted("certificate search budget exhausted");
      }
      remaining -= std::min(remaining, s.nodes());
    }
  }  // namespace detail

  // First certificate over the catalog in order, or nothing. Nothing means
  // the search completed without success, which proves nothing.
  inline std::optional<Certificate> search_certificate(FiniteQuandle const& Q, std::vector<FiniteGroup> const& catalog,
                                                       std::size_t budget = default_search_budget()) {
    std::size_t remaining = budget;
    for (auto const& G : catalog) {
      if (G.order() < Q.order()) {
        continue;
      }
      std::optional<Certificate> found;
      detail::search_conj_maps(Q, G, true, remaining, [&](std::vector<std::size_t> const& f) {
        found = Certificate{G, f};
        return false;
      });
      if (found) {
        return found;
      }
    }
    return std::nullopt;
  }

  // A homomorphism Q -> Conj(G) whose images generate a non-abelian
  // subgroup H. It induces a surjection G_Q -> H, so G_Q is not abelian.
  struct NonabelianQuotient {
    FiniteGroup              group;
    std::vector<std::size_t> images;
    std::size_t              subgroup_order;
  };

  inline std::optional<NonabelianQuotient> find_nonabelian_quotient(FiniteQuandle const& Q, FiniteGroup const& G,
                                                                    std::size_t budget = default_search_budget()) {
    std::optional<NonabelianQuotient> found;
    std::size_t                       remaining = budget;
    detail::search_conj_maps(Q, G, false, remaining, [&](std::vector<std::size_t> const& f) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          if (G.mul(f[i], f[j]) != G.mul(f[j], f[i])) {
            found = NonabelianQuotient{G, f, generated_subgroup(G, f).size()};
            return false;
          }
        }
      }
      return true;
    });
    return found;
  }

  struct ReconstructionResult {
    bool                                    isomorphic = false;
    std::optional<std::vector<std::size_t>> witness;  // Q -> Q(G, A)
    std::vector<std::size_t>                A;
    std::size_t                             ga_order = 0;
  };

  // A = images of the least element of each orbit; compares Q with Q(G, A).
  // A negative answer is a report, not a refutation: G only stands in for
  // the enveloping group.
  inline ReconstructionResult reconstruct_check(FiniteQuandle const& Q, Certificate const& cert,
                                                std::size_t budget = default_search_budget()) {
    ReconstructionResult r;
    for (auto const& b : orbits(Q)) {
      r.A.push_back(cert.images.at(b.front()));
    }
    auto const QA = ga_quandle(cert.group, r.A);
    r.ga_order    = QA.order();
    if (QA.order() == Q.order()) {
      r.witness = is_isomorphic(Q, QA.quandle(), budget);
    }
    r.isomorphic = r.witness.has_value();
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // U(n,m): two-generator presentation and its verification
  ////////////////////////////////////////////////////////////////////////

  // <x0, y0 | [x0,c], [y0,c], c^n, c^m> with c = [x0,y0]
  inline GroupPresentation u_reduced_presentation(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) {
      throw invalid_argument("U(n,m) needs n, m >= 1");
    }
    GroupPresentation P;
    P.num_generators = 2;
    P.names          = {"x0", "y0"};
    auto const x = gen(0), y = gen(1);
    auto const c = word_commutator(x, y);
    for (auto const& r : {word_commutator(x, c), word_commutator(y, c), word_power(c, static_cast<long long>(n)),
                          word_power(c, static_cast<long long>(m))}) {
      if (!r.empty()) {
        P.relators.push_back(r);
      }
    }
    return P;
  }

  struct UReductionReport {
    std::size_t n = 0, m = 0;
    std::size_t model_order               = 0;
    bool        full_relators_hold        = false;  // presentation_of(U(n,m)) under substitution
    bool        reduced_relators_hold     = false;
    bool        conjugation_forms_hold    = false;  // x_i = y0^{-i} x0 y0^i, y_r = x0^{-r} y0 x0^r
    bool        images_generate           = false;
    bool        model_abelian             = false;
    bool        coprime                   = false;
    bool        literal_substitution_holds = false;  // y_r -> y0 c^{+r}, informational

    bool passed() const noexcept {
      return full_relators_hold && reduced_relators_hold && conjugation_forms_hold && images_generate
          && model_abelian == coprime;
    }
  };

  // Images of x_0..x_{n-1}, y_0..y_{m-1} in the model: x_i -> x0 c^i and
  // y_r -> y0 c^{sign*r}, c = [x0,y0].
  inline std::vector<std::size_t> u_model_images(HeisenbergModel const& H, std::size_t n, std::size_t m,
                                                 int y_sign = -1) {
    auto const&              G = H.group;
    auto const               c = commutator(G, H.x0, H.y0);
    std::vector<std::size_t> img;
    for (std::size_t i = 0; i < n; ++i) {
      img.push_back(G.mul(H.x0, power(G, c, static_cast<long long>(i))));
    }
    for (std::size_t r = 0; r < m; ++r) {
      img.push_back(G.mul(H.y0, power(G, c, y_sign * static_cast<long long>(r))));
    }
    return img;
  }

  inline UReductionReport verify_u_reduction(std::size_t n, std::size_t m) {
    UReductionReport rep;
    rep.n = n;
    rep.m = m;
    auto const  H = make_heisenberg_model(n, m);
    auto const& G = H.group;
    rep.model_order = G.order();

    auto const U   = u_quandle(n, m);
    auto const PU  = presentation_of(U);
    auto const img = u_model_images(H, n, m);
    rep.full_relators_hold         = eval_assignment(PU, {G, img});
    rep.literal_substitution_holds = eval_assignment(PU, {G, u_model_images(H, n, m, +1)});
    rep.reduced_relators_hold      = eval_assignment(u_reduced_presentation(n, m), {G, {H.x0, H.y0}});

    bool forms = true;
    for (std::size_t i = 0; i < n; ++i) {
      forms = forms && img[i] == conjugate(G, H.x0, power(G, H.y0, static_cast<long long>(i)));
    }
    for (std::size_t r = 0; r < m; ++r) {
      forms = forms && img[n + r] == conjugate(G, H.y0, power(G, H.x0, static_cast<long long>(r)));
    }
    rep.conjugation_forms_hold = forms;
    rep.images_generate        = generates(G, img);
    rep.model_abelian          = G.is_abelian();
    rep.coprime                = std::gcd(n, m) == 1;
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // R_{2n}: two-generator presentation and its verification
  ////////////////////////////////////////////////////////////////////////

  // <a0, a1 | [a0,a1^2], [a0^2,a1], [a0,(a0 a1)^n], [a1,(a0 a1)^n]>
  inline GroupPresentation r2n_presentation(std::size_t n) {
    if (n == 0) {
      throw invalid_argument("R_2n needs n >= 1");
    }
    GroupPresentation P;
    P.num_generators = 2;
    P.names          = {"a0", "a1"};
    auto const a0 = gen(0), a1 = gen(1);
    auto const w = word_power(word_concat(a0, a1), static_cast<long long>(n));
    for (auto const& r : {word_commutator(a0, word_power(a1, 2)), word_commutator(word_power(a0, 2), a1),
                          word_commutator(a0, w), word_commutator(a1, w)}) {
      P.relators.push_back(r);
    }
    return P;
  }

  struct R2nReport {
    std::size_t n                        = 0;
    bool        defining_relators_hold   = false;
    bool        derived_distinct         = false;
    bool        derived_are_reflections  = false;  // a_i -> s r^i
    std::size_t conjugation_relators     = 0;      // (2n)^2 evaluated
    std::size_t conjugation_relators_ok  = 0;
    bool        certificate_ok           = false;

    bool passed() const noexcept {
      return defining_relators_hold && derived_distinct && derived_are_reflections
          && conjugation_relators == conjugation_relators_ok && certificate_ok;
    }
  };

  // Assignment a_i -> s r^i in the dihedral group of order 4n.
  inline Assignment r2n_assignment(std::size_t n) {
    auto                     G = dihedral_group(2 * n);
    std::vector<std::size_t> img;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      img.push_back(2 * n + i);
    }
    return {std::move(G), std::move(img)};
  }

  inline R2nReport verify_r2n(std::size_t n) {
    R2nReport rep;
    rep.n = n;
    auto const  asg = r2n_assignment(n);
    auto const& G   = asg.group;
    std::size_t const a0 = asg.images[0], a1 = asg.images[1];
    rep.defining_relators_hold = eval_assignment(r2n_presentation(n), {G, {a0, a1}});

    // a_{2r+e} = (a0 a1)^{-r} a_e (a0 a1)^r
    std::size_t const        k = 2 * n;
    std::vector<std::size_t> a(k);
    auto const               w = G.mul(a0, a1);
    for (std::size_t r = 0; r < n; ++r) {
      auto const wr = power(G, w, static_cast<long long>(r));
      a[2 * r]      = conjugate(G, a0, wr);
      a[2 * r + 1]  = conjugate(G, a1, wr);
    }
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    rep.derived_distinct        = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    rep.derived_are_reflections = a == asg.images;

    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        ++rep.conjugation_relators;
        rep.conjugation_relators_ok += conjugate(G, a[i], a[j]) == a[(2 * j + k - i) % k];
      }
    }
    try {
      injectivity_certificate(dihedral_quandle(k), {G, a});
      rep.certificate_ok = true;
    } catch (certificate_failed const&) {
      rep.certificate_ok = false;
    }
    return rep;
  }

}  // namespace qf
