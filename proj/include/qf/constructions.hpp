#pragma once

// Named quandle constructions. Element numbering is documented per factory.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "fingroup.hpp"
#include "permutation.hpp"
#include "quandle.hpp"

namespace qf {

  // T_n: x*y = x
  inline FiniteQuandle trivial_quandle(std::size_t n) {
    if (n == 0) {
      throw invalid_argument("trivial quandle needs n >= 1");
    }
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(t[i].begin(), t[i].end(), i);
    }
    return FiniteQuandle::from_table(t);
  }

  // R_n: x_i * x_j = x_{2j-i mod n}, element i is x_i.
  inline FiniteQuandle dihedral_quandle(std::size_t n) {
    if (n == 0) {
      throw invalid_argument("dihedral quandle needs n >= 1");
    }
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = (2 * j + n - i) % n;
      }
    }
    return FiniteQuandle::from_table(t);
  }

  // T(H): x*y = 2y - x on an abelian group, written multiplicatively as
  // y x^{-1} y. Elements keep the group numbering.
  inline FiniteQuandle takasaki(FiniteGroup const& H) {
    if (!H.is_abelian()) {
      throw not_abelian("Takasaki quandle needs an abelian group");
    }
    std::size_t const n = H.order();
    Table             t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = H.mul(H.mul(y, H.inv(x)), y);
      }
    }
    return FiniteQuandle::from_table(t, H.labels());
  }

  // Conj(G): x*y = y^{-1} x y
  inline FiniteQuandle conj(FiniteGroup const& G) {
    std::size_t const n = G.order();
    if (n > max_quandle_order) {
      throw size_overflow("conj quandle order exceeds limit");
    }
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = conjugate(G, x, y);
      }
    }
    return FiniteQuandle::from_table(t, G.labels());
  }

  // Conj_{-1}(G): x*y = y x y^{-1}
  inline FiniteQuandle conj_inv(FiniteGroup const& G) {
    std::size_t const n = G.order();
    if (n > max_quandle_order) {
      throw size_overflow("conj quandle order exceeds limit");
    }
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = G.mul(G.mul(y, x), G.inv(y));
      }
    }
    return FiniteQuandle::from_table(t, G.labels());
  }

  // Core(G): x*y = y x^{-1} y
  inline FiniteQuandle core(FiniteGroup const& G) {
    std::size_t const n = G.order();
    if (n > max_quandle_order) {
      throw size_overflow("core quandle order exceeds limit");
    }
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = G.mul(G.mul(y, G.inv(x)), y);
      }
    }
    return FiniteQuandle::from_table(t, G.labels());
  }

  ////////////////////////////////////////////////////////////////////////
  // Union of two quandles
  ////////////////////////////////////////////////////////////////////////

  enum class UnionCondition {
    sigma_not_automorphism,
    tau_not_automorphism,
    sigma_not_homomorphism,
    tau_not_homomorphism,
    condition_1,
    condition_2
  };

  inline char const* union_condition_name(UnionCondition c) {
    switch (c) {
      case UnionCondition::sigma_not_automorphism: return "sigma_not_automorphism";
      case UnionCondition::tau_not_automorphism: return "tau_not_automorphism";
      case UnionCondition::sigma_not_homomorphism: return "sigma_not_homomorphism";
      case UnionCondition::tau_not_homomorphism: return "tau_not_homomorphism";
      case UnionCondition::condition_1: return "condition_1";
      case UnionCondition::condition_2: return "condition_2";
    }
    return "?";
  }

  class union_condition_violated : public invalid_argument {
   public:
    union_condition_violated(UnionCondition which, std::array<std::size_t, 3> witness)
        : invalid_argument(std::string("union condition violated: ") + union_condition_name(which) + " at ("
                           + std::to_string(witness[0]) + "," + std::to_string(witness[1]) + ","
                           + std::to_string(witness[2]) + ")"),
          _which(which), _witness(witness) {}

    UnionCondition which() const noexcept {
      return _which;
    }

    std::array<std::size_t, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    UnionCondition             _which;
    std::array<std::size_t, 3> _witness;
  };

  namespace detail {
    inline bool is_automorphism(FiniteQuandle const& Q, Permutation const& p, std::size_t& bad_x,
                                std::size_t& bad_y) {
      for (std::size_t x = 0; x < Q.order(); ++x) {
        for (std::size_t y = 0; y < Q.order(); ++y) {
          if (p(Q.op(x, y)) != Q.op(p(x), p(y))) {
            bad_x = x;
            bad_y = y;
            return false;
          }
        }
      }
      return true;
    }

    // f : Q -> Conj_{-1}(Aut(R)) with automorphisms applied as functions,
    // so the requirement reads f(x*y) = f(y) o f(x) o f(y)^{-1}.
    inline void check_action(FiniteQuandle const& Q, FiniteQuandle const& R, std::vector<Permutation> const& f,
                             UnionCondition not_aut, UnionCondition not_hom) {
      if (f.size() != Q.order()) {
        throw invalid_argument("union map has wrong number of entries");
      }
      for (std::size_t x = 0; x < Q.order(); ++x) {
        if (f[x].size() != R.order()) {
          throw invalid_argument("union map permutation has wrong size");
        }
        std::size_t a = 0, b = 0;
        if (!is_automorphism(R, f[x], a, b)) {
          throw union_condition_violated(not_aut, {x, a, b});
        }
      }
      for (std::size_t x = 0; x < Q.order(); ++x) {
        for (std::size_t y = 0; y < Q.order(); ++y) {
          auto const& fy  = f[y];
          auto const& fxy = f[Q.op(x, y)];
          for (std::size_t z = 0; z < R.order(); ++z) {
            // f(y)(f(x)(f(y)^{-1}(z)))
            std::size_t w = 0;
            while (fy(w) != z) {
              ++w;
            }
            if (fxy(z) != fy(f[x](w))) {
              throw union_condition_violated(not_hom, {x, y, z});
            }
          }
        }
      }
    }
  }  // namespace detail

  // Q1 ⊔_{σ,τ} Q2 on Q1's elements (0..|Q1|-1) followed by Q2's. sigma[x]
  // is an automorphism of Q2 for each x in Q1, tau[z] one of Q1 for each z
  // in Q2. Products across blocks: x*z = tau[z](x), z*x = sigma[x](z).
  inline FiniteQuandle quandle_union(FiniteQuandle const& Q1, FiniteQuandle const& Q2,
                                     std::vector<Permutation> const& sigma, std::vector<Permutation> const& tau) {
    std::size_t const n1 = Q1.order(), n2 = Q2.order();
    if (n1 + n2 > max_quandle_order) {
      throw size_overflow("union order exceeds limit");
    }
    detail::check_action(Q1, Q2, sigma, UnionCondition::sigma_not_automorphism,
                         UnionCondition::sigma_not_homomorphism);
    detail::check_action(Q2, Q1, tau, UnionCondition::tau_not_automorphism, UnionCondition::tau_not_homomorphism);
    // (1) tau(z)(x) * y = tau(sigma(y)(z))(x * y),   x, y in Q1, z in Q2
    for (std::size_t x = 0; x < n1; ++x) {
      for (std::size_t y = 0; y < n1; ++y) {
        for (std::size_t z = 0; z < n2; ++z) {
          if (Q1.op(tau[z](x), y) != tau[sigma[y](z)](Q1.op(x, y))) {
            throw union_condition_violated(UnionCondition::condition_1, {x, y, z});
          }
        }
      }
    }
    // (2) sigma(z)(x) o y = sigma(tau(y)(z))(x o y), x, y in Q2, z in Q1
    for (std::size_t x = 0; x < n2; ++x) {
      for (std::size_t y = 0; y < n2; ++y) {
        for (std::size_t z = 0; z < n1; ++z) {
          if (Q2.op(sigma[z](x), y) != sigma[tau[y](z)](Q2.op(x, y))) {
            throw union_condition_violated(UnionCondition::condition_2, {x, y, z});
          }
        }
      }
    }
    std::size_t const n = n1 + n2;
    Table             t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        bool const a1 = a < n1, b1 = b < n1;
        if (a1 && b1) {
          t[a][b] = Q1.op(a, b);
        } else if (!a1 && !b1) {
          t[a][b] = n1 + Q2.op(a - n1, b - n1);
        } else if (a1) {
          t[a][b] = tau[b - n1](a);
        } else {
          t[a][b] = n1 + sigma[b](a - n1);
        }
      }
    }
    return FiniteQuandle::from_table(t);
  }

  // U(n,m) = T_n ⊔ T_m with x_i * y_r = x_{i+1 mod n}, y_r * x_i = y_{r+1 mod m}.
  // Elements 0..n-1 are x_0..x_{n-1}; n..n+m-1 are y_0..y_{m-1}.
  inline FiniteQuandle u_quandle(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) {
      throw invalid_argument("U(n,m) needs n, m >= 1");
    }
    if (n + m > max_quandle_order) {
      throw size_overflow("U(n,m) order exceeds limit");
    }
    std::vector<Permutation> sigma(n, Permutation::cycle(m));
    std::vector<Permutation> tau(m, Permutation::cycle(n));
    auto                     Q = quandle_union(trivial_quandle(n), trivial_quandle(m), sigma, tau);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("x" + std::to_string(i));
    }
    for (std::size_t r = 0; r < m; ++r) {
      names.push_back("y" + std::to_string(r));
    }
    return FiniteQuandle::from_table(Q.table(), std::move(names));
  }

}  // namespace qf
