#pragma once

// The (G,A)-quandle Q(G,A) for a finite group G: pairs (a,u), a in A,
// u in G, modulo u ~ c u for c in C_G(a), with (a,u)*(b,v) = (a, u v^{-1} b v).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "fingroup.hpp"
#include "permutation.hpp"
#include "quandle.hpp"

namespace qf {

  // coset_rep is the least element index of the right coset C_G(a) u.
  struct GAElement {
    std::size_t a_index;
    std::size_t coset_rep;

    bool operator==(GAElement const&) const = default;
    auto operator<=>(GAElement const&) const = default;
  };

  class GAQuandle {
   public:
    GAQuandle(FiniteGroup G, std::vector<std::size_t> A) : _group(std::move(G)), _A(std::move(A)) {
      if (_A.empty()) {
        throw invalid_argument("Q(G,A) needs a non-empty A");
      }
      std::size_t const n = _group.order();
      for (std::size_t i = 0; i < _A.size(); ++i) {
        if (_A[i] >= n) {
          throw invalid_argument("element of A out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (_A[i] == _A[j]) {
            throw duplicate_base_element("element " + std::to_string(_A[i]) + " appears twice in A");
          }
        }
      }
      // For each a: position of the coset of every u, and the reps.
      _position.assign(_A.size(), std::vector<std::size_t>(n));
      std::size_t total = 0;
      for (std::size_t k = 0; k < _A.size(); ++k) {
        auto const        C = centralizer(_group, _A[k]);
        std::vector<char> seen(n, 0);
        for (std::size_t u = 0; u < n; ++u) {
          if (seen[u]) {
            continue;
          }
          // u is the least unvisited element, hence least in its coset
          for (auto c : C) {
            auto w = _group.mul(c, u);
            seen[w] = 1;
            _position[k][w] = total;
          }
          _labels.push_back({k, u});
          ++total;
          if (total > max_quandle_order) {
            throw size_overflow("Q(G,A) order exceeds limit");
          }
        }
      }
      Table t(total, std::vector<std::size_t>(total));
      for (std::size_t i = 0; i < total; ++i) {
        auto const [ka, u] = _labels[i];
        for (std::size_t j = 0; j < total; ++j) {
          auto const [kb, v] = _labels[j];
          auto const w = _group.mul(_group.mul(u, _group.inv(v)), _group.mul(_A[kb], v));
          t[i][j] = _position[ka][w];
        }
      }
      std::vector<std::string> names;
      for (auto const& [k, u] : _labels) {
        names.push_back("(" + _group.label(_A[k]) + "," + _group.label(u) + ")");
      }
      _quandle = FiniteQuandle::from_table(t, std::move(names));
    }

    FiniteGroup const& group() const noexcept {
      return _group;
    }

    std::vector<std::size_t> const& base() const noexcept {
      return _A;
    }

    FiniteQuandle const& quandle() const noexcept {
      return _quandle;
    }

    std::vector<GAElement> const& element_labels() const noexcept {
      return _labels;
    }

    std::size_t order() const noexcept {
      return _quandle.order();
    }

    // Quandle element holding the class of (A[a_index], u).
    std::size_t element_of(std::size_t a_index, std::size_t u) const {
      return _position.at(a_index).at(u);
    }

    // (a,u)*^{-1}(b,v) = (a, u v^{-1} b^{-1} v), evaluated from the formula.
    std::size_t op_inv_formula(std::size_t i, std::size_t j) const {
      auto const [ka, u] = _labels[i];
      auto const [kb, v] = _labels[j];
      auto const w = _group.mul(_group.mul(u, _group.inv(v)), _group.mul(_group.inv(_A[kb]), v));
      return _position[ka][w];
    }

   private:
    FiniteGroup                           _group;
    std::vector<std::size_t>              _A;
    std::vector<std::vector<std::size_t>> _position;
    std::vector<GAElement>                _labels;
    FiniteQuandle                         _quandle;
  };

  inline GAQuandle ga_quandle(FiniteGroup const& G, std::vector<std::size_t> const& A) {
    return GAQuandle(G, A);
  }

  // iota_g : (a,u) -> (a,ug); checked to be an automorphism.
  inline Permutation iota(GAQuandle const& QA, std::size_t g) {
    auto const&              G = QA.group();
    std::vector<std::size_t> img(QA.order());
    for (std::size_t i = 0; i < QA.order(); ++i) {
      auto const [k, u] = QA.element_labels()[i];
      img[i] = QA.element_of(k, G.mul(u, g));
    }
    Permutation p(std::move(img));
    if (!is_isomorphism(QA.quandle(), QA.quandle(), p.images())) {
      throw std::logic_error("iota_g is not an automorphism");
    }
    return p;
  }

  struct AugmentationReport {
    bool                     aq1 = true;
    bool                     aq2 = true;
    bool                     epsilon_hom = true;
    bool                     action_matches_op = true;
    std::vector<std::string> diagnostics;

    bool ok() const noexcept {
      return aq1 && aq2 && epsilon_hom && action_matches_op;
    }
  };

  // Augmentation eps(a,g) = g^{-1} a g with right action (a,g).h = (a,gh):
  // checks AQ1, AQ2, that eps is a homomorphism into Conj(G), and that
  // p*q = p . eps(q).
  inline AugmentationReport augmentation_check(GAQuandle const& QA) {
    AugmentationReport r;
    auto const&        G = QA.group();
    auto const&        Q = QA.quandle();
    auto eps = [&](std::size_t i) {
      auto const [k, u] = QA.element_labels()[i];
      return conjugate(G, QA.base()[k], u);
    };
    auto act = [&](std::size_t i, std::size_t h) {
      auto const [k, u] = QA.element_labels()[i];
      return QA.element_of(k, G.mul(u, h));
    };
    for (std::size_t q = 0; q < Q.order(); ++q) {
      if (r.aq1 && act(q, eps(q)) != q) {
        r.aq1 = false;
        r.diagnostics.push_back("AQ1 fails at element " + std::to_string(q));
      }
      for (std::size_t x = 0; x < G.order() && r.aq2; ++x) {
        if (eps(act(q, x)) != conjugate(G, eps(q), x)) {
          r.aq2 = false;
          r.diagnostics.push_back("AQ2 fails at element " + std::to_string(q) + ", g=" + std::to_string(x));
        }
      }
      for (std::size_t p = 0; p < Q.order(); ++p) {
        if (r.epsilon_hom && eps(Q.op(p, q)) != conjugate(G, eps(p), eps(q))) {
          r.epsilon_hom = false;
          r.diagnostics.push_back("eps not a homomorphism at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
        if (r.action_matches_op && Q.op(p, q) != act(p, eps(q))) {
          r.action_matches_op = false;
          r.diagnostics.push_back("p*q != p.eps(q) at (" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
      }
    }
    return r;
  }

  // Union of the conjugacy classes of A, ascending.
  inline std::vector<std::size_t> class_union(FiniteGroup const& G, std::vector<std::size_t> const& A) {
    std::vector<std::size_t> out;
    for (auto a : A) {
      auto cls = conjugacy_class_of(G, a);
      out.insert(out.end(), cls.begin(), cls.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Subquandle of Conj(G) on the union of the classes of A.
  inline FiniteQuandle conjugation_union_subquandle(FiniteGroup const& G, std::vector<std::size_t> const& A) {
    auto const               S = class_union(G, A);
    std::vector<std::size_t> pos(G.order());
    for (std::size_t i = 0; i < S.size(); ++i) {
      pos[S[i]] = i;
    }
    Table                    t(S.size(), std::vector<std::size_t>(S.size()));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < S.size(); ++i) {
      names.push_back(G.label(S[i]));
      for (std::size_t j = 0; j < S.size(); ++j) {
        t[i][j] = pos[conjugate(G, S[i], S[j])];
      }
    }
    return FiniteQuandle::from_table(t, std::move(names));
  }

  struct ConjComparison {
    bool                                    isomorphic;
    std::optional<std::vector<std::size_t>> witness;  // Q(G,A) -> subquandle
    std::size_t                             ga_order;
    std::size_t                             sub_order;
    std::size_t                             ga_orbits;
    std::size_t                             sub_orbits;
  };

  inline bool pairwise_non_conjugate(FiniteGroup const& G, std::vector<std::size_t> const& A) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      auto cls = conjugacy_class_of(G, A[i]);
      for (std::size_t j = i + 1; j < A.size(); ++j) {
        if (std::binary_search(cls.begin(), cls.end(), A[j])) {
          return false;
        }
      }
    }
    return true;
  }

  inline ConjComparison compare_with_ga(FiniteGroup const& G, std::vector<std::size_t> const& A,
                                        std::size_t budget = default_search_budget()) {
    auto const QA  = ga_quandle(G, A);
    auto const Sub = conjugation_union_subquandle(G, A);
    ConjComparison c{};
    c.ga_order   = QA.order();
    c.sub_order  = Sub.order();
    c.ga_orbits  = orbits(QA.quandle()).size();
    c.sub_orbits = orbits(Sub).size();
    if (c.ga_order == c.sub_order && c.ga_orbits == c.sub_orbits) {
      c.witness = is_isomorphic(QA.quandle(), Sub, budget);
    }
    c.isomorphic = c.witness.has_value();
    return c;
  }

  // The map (a,u) -> u^{-1} a u from Q(G,A) to the class union; an
  // isomorphism whenever A is pairwise non-conjugate.
  inline std::vector<std::size_t> conjugation_map(GAQuandle const& QA) {
    auto const& G = QA.group();
    auto const  S = class_union(G, QA.base());
    std::vector<std::size_t> f;
    for (auto const& [k, u] : QA.element_labels()) {
      auto img = conjugate(G, QA.base()[k], u);
      f.push_back(static_cast<std::size_t>(std::lower_bound(S.begin(), S.end(), img) - S.begin()));
    }
    return f;
  }

}  // namespace qf
