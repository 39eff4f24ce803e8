#pragma once

// Small-order quandle enumeration, recognition of U(n,m), and the scan of
// 2-orbit quandles for enveloping groups that could be Z^2.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "constructions.hpp"
#include "envelope.hpp"
#include "error.hpp"
#include "fingroup.hpp"
#include "quandle.hpp"

namespace qf {

  ////////////////////////////////////////////////////////////////////////
  // Canonical form
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Colours that depend only on the isomorphism type: ranks of sorted
    // invariant keys, refined by row and column colour multisets.
    inline std::vector<std::size_t> invariant_colors(FiniteQuandle const& Q) {
      std::size_t const        n = Q.order();
      std::vector<std::size_t> c(n, 0);
      using Key = std::vector<std::size_t>;
      auto rank = [&](std::vector<Key> const& keys) {
        std::vector<Key> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<std::size_t> out(n);
        for (std::size_t x = 0; x < n; ++x) {
          out[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[x]) - sorted.begin());
        }
        return std::make_pair(out, sorted.size());
      };
      std::vector<Key> keys(n);
      for (std::size_t x = 0; x < n; ++x) {
        auto ct = inner_symmetry(Q, x).cycle_type();
        std::size_t rowfix = 0;
        for (std::size_t y = 0; y < n; ++y) {
          rowfix += Q.op(x, y) == x;
        }
        keys[x] = ct;
        keys[x].push_back(n + rowfix);
      }
      auto [col, classes] = rank(keys);
      c = col;
      for (;;) {
        for (std::size_t x = 0; x < n; ++x) {
          std::vector<std::pair<std::size_t, std::size_t>> row, column;
          for (std::size_t y = 0; y < n; ++y) {
            row.emplace_back(c[y], c[Q.op(x, y)]);
            column.emplace_back(c[y], c[Q.op(y, x)]);
          }
          std::sort(row.begin(), row.end());
          std::sort(column.begin(), column.end());
          Key k{c[x]};
          for (auto [a, b] : row) {
            k.push_back(a);
            k.push_back(b);
          }
          for (auto [a, b] : column) {
            k.push_back(a);
            k.push_back(b);
          }
          keys[x] = std::move(k);
        }
        auto [next, next_classes] = rank(keys);
        c = next;
        if (next_classes == classes) {
          break;
        }
        classes = next_classes;
      }
      return c;
    }
  }  // namespace detail

  // Least relabelled table (row-major) over relabelings that list elements
  // by invariant colour; equal for isomorphic quandles.
  inline Table canonical_table(FiniteQuandle const& Q) {
    std::size_t const n   = Q.order();
    auto const        col = detail::invariant_colors(Q);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return std::tie(col[a], a) < std::tie(col[b], b); });
    // blocks of equal colour in `order`
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && col[order[j]] == col[order[i]]) {
        ++j;
      }
      blocks.emplace_back(i, j);
      i = j;
    }
    std::vector<std::size_t> best;
    std::vector<std::size_t> flat(n * n), new_of(n);
    auto                     consider = [&] {
      for (std::size_t i = 0; i < n; ++i) {
        new_of[order[i]] = i;
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          flat[i * n + j] = new_of[Q.op(order[i], order[j])];
        }
      }
      if (best.empty() || flat < best) {
        best = flat;
      }
    };
    // odometer over permutations of each block
    for (auto [b, e] : blocks) {
      std::sort(order.begin() + static_cast<std::ptrdiff_t>(b), order.begin() + static_cast<std::ptrdiff_t>(e));
    }
    for (;;) {
      consider();
      std::size_t k = blocks.size();
      while (k > 0) {
        auto [b, e] = blocks[k - 1];
        if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(b),
                                  order.begin() + static_cast<std::ptrdiff_t>(e))) {
          break;
        }
        --k;
      }
      if (k == 0) {
        break;
      }
    }
    Table t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = best[i * n + j];
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  struct EnumerationFilters {
    std::optional<std::size_t> orbit_count;
    std::optional<bool>        connected;
  };

  inline constexpr std::size_t max_enumeration_order          = 6;
  inline constexpr std::size_t max_filtered_enumeration_order = 8;

  // All quandles of the given order up to isomorphism, as canonical tables
  // in increasing lexicographic order. Columns (the maps S_x, each fixing
  // x) are chosen in turn and right distributivity is checked as soon as
  // the columns it involves are known.
  inline std::vector<FiniteQuandle> enumerate_quandles(std::size_t order, EnumerationFilters const& filters = {},
                                                       std::size_t budget = default_search_budget()) {
    bool const filtered = filters.orbit_count.has_value() || filters.connected.has_value();
    if (order == 0 || order > (filtered ? max_filtered_enumeration_order : max_enumeration_order)) {
      throw order_limit_exceeded("enumeration supports order 1.." + std::to_string(max_enumeration_order)
                                 + " (" + std::to_string(max_filtered_enumeration_order) + " with filters)");
    }
    std::size_t const                     n = order;
    std::vector<std::vector<std::size_t>> col(n);  // col[x][y] = y*x
    std::set<Table>                       found;
    std::size_t                           nodes = 0;

    auto consistent = [&](std::size_t k) {
      // (y*z)*x = (y*x)*(z*x) whenever columns z, x and z*x are among 0..k
      for (std::size_t x = 0; x <= k; ++x) {
        for (std::size_t z = 0; z <= k; ++z) {
          std::size_t const zx = col[x][z];
          if (zx > k || (x != k && z != k && zx != k)) {
            continue;
          }
          for (std::size_t y = 0; y < n; ++y) {
            if (col[x][col[z][y]] != col[zx][col[x][y]]) {
              return false;
            }
          }
        }
      }
      return true;
    };

    auto leaf = [&] {
      Table t(n, std::vector<std::size_t>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          t[y][x] = col[x][y];
        }
      }
      auto Q = FiniteQuandle::from_table(t);
      if (filters.orbit_count || filters.connected) {
        auto const k = orbits(Q).size();
        if (filters.orbit_count && k != *filters.orbit_count) {
          return;
        }
        if (filters.connected && (k == 1) != *filters.connected) {
          return;
        }
      }
      found.insert(canonical_table(Q));
    };

    auto dfs = [&](auto& self, std::size_t k) -> void {
      if (++nodes > budget) {
        throw search_limit_exceeded("enumeration exceeded budget of " + std::to_string(budget) + " nodes");
      }
      if (k == n) {
        leaf();
        return;
      }
      std::vector<std::size_t> others;
      for (std::size_t y = 0; y < n; ++y) {
        if (y != k) {
          others.push_back(y);
        }
      }
      do {
        col[k].assign(n, 0);
        col[k][k] = k;
        for (std::size_t i = 0, y = 0; y < n; ++y) {
          if (y != k) {
            col[k][y] = others[i++];
          }
        }
        if (consistent(k)) {
          self(self, k + 1);
        }
      } while (std::next_permutation(others.begin(), others.end()));
    };
    dfs(dfs, 0);

    std::vector<FiniteQuandle> out;
    for (auto const& t : found) {
      out.push_back(FiniteQuandle::from_table(t));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Recognising U(n,m)
  ////////////////////////////////////////////////////////////////////////

  struct UMatch {
    std::size_t              n;
    std::size_t              m;
    std::vector<std::size_t> witness;  // isomorphism Q -> u_quandle(n, m)
  };

  // (n, m) with n <= m iff Q is isomorphic to U(n,m).
  inline std::optional<UMatch> detect_u(FiniteQuandle const& Q, std::size_t budget = default_search_budget()) {
    auto const orb = orbits(Q);
    if (orb.size() != 2) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < 2; ++i) {
      auto const& mine  = orb[i];
      auto const& other = orb[1 - i];
      for (auto x : mine) {
        for (auto y : mine) {
          if (Q.op(x, y) != x) {
            return std::nullopt;
          }
        }
      }
      // every element of `other` acts on `mine` as one and the same full cycle
      auto const first = inner_symmetry(Q, other.front());
      for (auto y : other) {
        auto const s = inner_symmetry(Q, y);
        for (auto x : mine) {
          if (s(x) != first(x)) {
            return std::nullopt;
          }
        }
      }
      std::size_t len = 1;
      for (auto x = first(mine.front()); x != mine.front(); x = first(x)) {
        ++len;
      }
      if (len != mine.size()) {
        return std::nullopt;
      }
    }
    std::size_t const n = std::min(orb[0].size(), orb[1].size());
    std::size_t const m = std::max(orb[0].size(), orb[1].size());
    auto              w = is_isomorphic(Q, u_quandle(n, m), budget);
    if (!w) {
      return std::nullopt;
    }
    return UMatch{n, m, *w};
  }

  ////////////////////////////////////////////////////////////////////////
  // Scan of 2-orbit quandles
  ////////////////////////////////////////////////////////////////////////

  enum class ScanVerdict {
    certified_not_z2,   // surjection onto a non-abelian group found
    no_quotient_found,  // coprime U(n,m): none expected
    unresolved          // search found nothing, yet the quandle is not a coprime U(n,m)
  };

  inline char const* scan_verdict_name(ScanVerdict v) {
    switch (v) {
      case ScanVerdict::certified_not_z2: return "certified_not_Z2";
      case ScanVerdict::no_quotient_found: return "no_quotient_found";
      case ScanVerdict::unresolved: return "unresolved";
    }
    return "?";
  }

  struct ScanEntry {
    std::size_t                order;
    std::size_t                index;  // position in enumerate_quandles(order, 2 orbits)
    FiniteQuandle              quandle;
    std::vector<std::size_t>   orbit_sizes;
    Abelianization             abelian;
    std::optional<UMatch>      u;
    std::size_t                gcd = 0;  // of (n, m) when u is set
    ScanVerdict                verdict;
    std::string                quotient_group;  // description of the certifying group
    std::size_t                quotient_order = 0;  // order of the subgroup the images generate
    std::vector<std::size_t>   quotient_images;
    bool                       theorem_says_z2 = false;
    bool                       contradiction   = false;
  };

  struct ScanReport {
    std::size_t            max_order = 0;
    std::vector<ScanEntry> entries;
    std::size_t            contradictions = 0;
    std::size_t            unresolved     = 0;
  };

  struct CatalogGroup {
    std::string name;
    FiniteGroup group;
  };

  // Non-abelian groups of order <= 128 used to look for quotients.
  inline std::vector<CatalogGroup> quotient_catalog() {
    std::vector<CatalogGroup> c;
    c.push_back({"S3", symmetric_group(3)});
    for (std::size_t k = 4; k <= 16; ++k) {
      c.push_back({"D" + std::to_string(k), dihedral_group(k)});
    }
    c.push_back({"AGL(1,5)", affine_group(5)});
    c.push_back({"AGL(1,7)", affine_group(7)});
    c.push_back({"S4", symmetric_group(4)});
    c.push_back({"H(2,2)", make_heisenberg_model(2, 2).group});
    c.push_back({"H(2,4)", make_heisenberg_model(2, 4).group});
    return c;
  }

  inline ScanReport abenvel_scan(std::size_t max_order, std::size_t budget = default_search_budget()) {
    if (max_order > max_enumeration_order) {
      throw order_limit_exceeded("scan supports orders up to " + std::to_string(max_enumeration_order));
    }
    ScanReport report;
    report.max_order   = max_order;
    auto const catalog = quotient_catalog();
    for (std::size_t order = 1; order <= max_order; ++order) {
      auto const list = enumerate_quandles(order, {2, std::nullopt}, budget);
      for (std::size_t idx = 0; idx < list.size(); ++idx) {
        ScanEntry e{order, idx, list[idx], {}, {}, std::nullopt, 0, ScanVerdict::unresolved, {}, 0, {}, false, false};
        for (auto const& b : orbits(e.quandle)) {
          e.orbit_sizes.push_back(b.size());
        }
        e.abelian = abelianization(presentation_of(e.quandle));
        e.u       = detect_u(e.quandle, budget);
        if (e.u) {
          e.gcd             = std::gcd(e.u->n, e.u->m);
          e.theorem_says_z2 = e.gcd == 1;
        }
        bool certified = false;
        if (e.u && e.gcd > 1) {
          // the substitution x_i -> x0 c^i, y_r -> y0 c^{-r} into the model
          auto const H   = make_heisenberg_model(e.u->n, e.u->m);
          auto const img = u_model_images(H, e.u->n, e.u->m);
          std::vector<std::size_t> f(e.quandle.order());
          for (std::size_t q = 0; q < f.size(); ++q) {
            f[q] = img[e.u->witness[q]];
          }
          if (eval_assignment(presentation_of(e.quandle), {H.group, f}) && generates(H.group, f)
              && !H.group.is_abelian()) {
            certified        = true;
            e.quotient_group = "H(" + std::to_string(e.u->n) + "," + std::to_string(e.u->m) + ")";
            e.quotient_order = H.group.order();
            e.quotient_images = f;
          }
        }
        for (std::size_t g = 0; g < catalog.size() && !certified; ++g) {
          if (auto q = find_nonabelian_quotient(e.quandle, catalog[g].group, budget)) {
            certified         = true;
            e.quotient_group  = catalog[g].name;
            e.quotient_order  = q->subgroup_order;
            e.quotient_images = q->images;
          }
        }
        if (certified) {
          e.verdict = ScanVerdict::certified_not_z2;
        } else {
          e.verdict = e.theorem_says_z2 ? ScanVerdict::no_quotient_found : ScanVerdict::unresolved;
        }
        // G_Q abelianizes to Z^(orbits); a coprime U(n,m) must never be
        // certified non-abelian.
        e.contradiction = !e.abelian.is_free_abelian(2) || (e.theorem_says_z2 && certified);
        report.contradictions += e.contradiction;
        report.unresolved += e.verdict == ScanVerdict::unresolved;
        report.entries.push_back(std::move(e));
      }
    }
    return report;
  }

}  // namespace qf
