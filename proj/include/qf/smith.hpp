#pragma once

// Smith normal form over the integers with exact (arbitrary precision)
// arithmetic.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace qf {

  using Integer   = boost::multiprecision::cpp_int;
  using IntMatrix = std::vector<std::vector<Integer>>;

  inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  inline IntMatrix matmul(IntMatrix const& a, IntMatrix const& b) {
    std::size_t const r = a.size();
    std::size_t const k = b.size();
    std::size_t const c = k == 0 ? 0 : b[0].size();
    IntMatrix         out(r, std::vector<Integer>(c, 0));
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i].size() != k) {
        throw invalid_argument("matrix shapes do not match");
      }
      for (std::size_t t = 0; t < k; ++t) {
        if (a[i][t] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < c; ++j) {
          out[i][j] += a[i][t] * b[t][j];
        }
      }
    }
    return out;
  }

  // Fraction-free (Bareiss) determinant.
  inline Integer determinant(IntMatrix m) {
    std::size_t const n = m.size();
    if (n == 0) {
      return 1;
    }
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && m[p][k] == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        std::swap(m[k], m[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
      }
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

  struct SmithResult {
    std::vector<Integer> diagonal;  // min(rows, cols) entries, d1 | d2 | ...
    IntMatrix            U;         // rows x rows
    IntMatrix            V;         // cols x cols
    IntMatrix            D;         // U * M * V
  };

  inline SmithResult smith_normal_form(IntMatrix const& M) {
    std::size_t const rows = M.size();
    std::size_t const cols = rows == 0 ? 0 : M[0].size();
    for (auto const& r : M) {
      if (r.size() != cols) {
        throw invalid_argument("ragged matrix");
      }
    }
    IntMatrix A = M;
    IntMatrix U = identity_matrix(rows);
    IntMatrix V = identity_matrix(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
      std::swap(A[i], A[j]);
      std::swap(U[i], U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
      for (auto& r : A) {
        std::swap(r[i], r[j]);
      }
      for (auto& r : V) {
        std::swap(r[i], r[j]);
      }
    };
    // row_i -= q * row_j
    auto add_row = [&](std::size_t i, std::size_t j, Integer const& q) {
      for (std::size_t c = 0; c < cols; ++c) {
        A[i][c] -= q * A[j][c];
      }
      for (std::size_t c = 0; c < rows; ++c) {
        U[i][c] -= q * U[j][c];
      }
    };
    auto add_col = [&](std::size_t i, std::size_t j, Integer const& q) {
      for (std::size_t r = 0; r < rows; ++r) {
        A[r][i] -= q * A[r][j];
      }
      for (std::size_t r = 0; r < cols; ++r) {
        V[r][i] -= q * V[r][j];
      }
    };
    auto negate_row = [&](std::size_t i) {
      for (auto& x : A[i]) {
        x = -x;
      }
      for (auto& x : U[i]) {
        x = -x;
      }
    };

    std::size_t const k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
      for (;;) {
        // pivot: smallest nonzero absolute value in the remaining block
        bool        found = false;
        std::size_t pr = t, pc = t;
        Integer     best;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (A[i][j] != 0 && (!found || abs(A[i][j]) < best)) {
              found = true;
              best  = abs(A[i][j]);
              pr    = i;
              pc    = j;
            }
          }
        }
        if (!found) {
          break;
        }
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (A[i][t] != 0) {
            add_row(i, t, A[i][t] / A[t][t]);
            clean = clean && A[i][t] == 0;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (A[t][j] != 0) {
            add_col(j, t, A[t][j] / A[t][t]);
            clean = clean && A[t][j] == 0;
          }
        }
        if (!clean) {
          continue;
        }
        // divisibility: fold any entry not divisible by the pivot into row t
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (A[i][j] % A[t][t] != 0) {
              add_row(t, i, -1);
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          break;
        }
      }
      if (A[t][t] < 0) {
        negate_row(t);
      }
    }

    SmithResult r;
    for (std::size_t t = 0; t < k; ++t) {
      r.diagonal.push_back(A[t][t]);
    }
    r.U = std::move(U);
    r.V = std::move(V);
    r.D = std::move(A);
    return r;
  }

}  // namespace qf
