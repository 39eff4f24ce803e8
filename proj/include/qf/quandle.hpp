#pragma once

// Finite quandles as Cayley tables: axioms, inner automorphisms, orbits,
// predicates, congruences, and homomorphism / isomorphism search.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace qf {

  inline constexpr std::size_t max_quandle_order = 2048;

  using Partition = std::vector<std::vector<std::size_t>>;

  enum class Axiom { r1, r2, q1 };

  inline char const* axiom_name(Axiom a) {
    switch (a) {
      case Axiom::r1: return "r1";
      case Axiom::r2: return "r2";
      case Axiom::q1: return "q1";
    }
    return "?";
  }

  // First axiom failure found by the checker. Witness layout:
  //   r1: (i, i', j)  with i*j == i'*j and i != i'
  //   r2: (x, y, z)   with (x*y)*z != (x*z)*(y*z)
  //   q1: (x, x, x)   with x*x != x
  // Axioms are checked in the order r1, r2, q1, so a q1 report means the
  // table is a rack that fails to be a quandle.
  struct AxiomReport {
    Axiom                      axiom;
    std::array<std::size_t, 3> witness;

    bool is_rack() const noexcept {
      return axiom == Axiom::q1;
    }

    std::string describe() const {
      auto w = [&](int i) { return std::to_string(witness[i]); };
      switch (axiom) {
        case Axiom::r1: return "r1 fails: " + w(0) + "*" + w(2) + " == " + w(1) + "*" + w(2);
        case Axiom::r2:
          return "r2 fails: (" + w(0) + "*" + w(1) + ")*" + w(2) + " != (" + w(0) + "*" + w(2) + ")*("
                 + w(1) + "*" + w(2) + ")";
        case Axiom::q1: return "q1 fails: " + w(0) + "*" + w(0) + " != " + w(0);
      }
      return {};
    }
  };

  class axiom_violation : public error {
   public:
    explicit axiom_violation(AxiomReport r) : error(r.describe()), _report(r) {}

    AxiomReport const& report() const noexcept {
      return _report;
    }

   private:
    AxiomReport _report;
  };

  using Table = std::vector<std::vector<std::size_t>>;

  // Shape and range errors throw invalid_argument; axiom failures are
  // returned.
  inline std::optional<AxiomReport> check_axioms(Table const& t) {
    std::size_t const n = t.size();
    if (n == 0) {
      throw invalid_argument("quandle table is empty");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i].size() != n) {
        throw invalid_argument("quandle table is not square (row " + std::to_string(i) + ")");
      }
      for (auto v : t[i]) {
        if (v >= n) {
          throw invalid_argument("quandle table entry out of range in row " + std::to_string(i));
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> seen(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        auto v = t[i][j];
        if (seen[v] != n) {
          return AxiomReport{Axiom::r1, {seen[v], i, j}};
        }
        seen[v] = i;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) {
            return AxiomReport{Axiom::r2, {x, y, z}};
          }
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (t[x][x] != x) {
        return AxiomReport{Axiom::q1, {x, x, x}};
      }
    }
    return std::nullopt;
  }

  class FiniteQuandle {
   public:
    FiniteQuandle() : FiniteQuandle(from_table({{0}})) {}

    // Validated construction; throws axiom_violation on the first failed
    // axiom.
    static FiniteQuandle from_table(Table const& t, std::vector<std::string> names = {}) {
      if (t.size() > max_quandle_order) {
        throw size_overflow("quandle order " + std::to_string(t.size()) + " exceeds limit "
                            + std::to_string(max_quandle_order));
      }
      if (auto bad = check_axioms(t)) {
        throw axiom_violation(*bad);
      }
      if (!names.empty() && names.size() != t.size()) {
        throw invalid_argument("name count does not match quandle order");
      }
      FiniteQuandle q{unchecked_tag{}};
      q._order = t.size();
      q._op.resize(q._order * q._order);
      q._op_inv.resize(q._order * q._order);
      for (std::size_t i = 0; i < q._order; ++i) {
        for (std::size_t j = 0; j < q._order; ++j) {
          q._op[i * q._order + j]           = static_cast<std::uint32_t>(t[i][j]);
          q._op_inv[t[i][j] * q._order + j] = static_cast<std::uint32_t>(i);
        }
      }
      q._names = std::move(names);
      return q;
    }

    std::size_t order() const noexcept {
      return _order;
    }

    // x * y
    std::size_t op(std::size_t x, std::size_t y) const noexcept {
      return _op[x * _order + y];
    }

    // x *^{-1} y, i.e. S_y^{-1}(x)
    std::size_t op_inv(std::size_t x, std::size_t y) const noexcept {
      return _op_inv[x * _order + y];
    }

    std::string name(std::size_t x) const {
      return _names.empty() ? std::to_string(x) : _names[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    Table table() const {
      Table t(_order, std::vector<std::size_t>(_order));
      for (std::size_t i = 0; i < _order; ++i) {
        for (std::size_t j = 0; j < _order; ++j) {
          t[i][j] = op(i, j);
        }
      }
      return t;
    }

    bool operator==(FiniteQuandle const& other) const {
      return _order == other._order && _op == other._op;
    }

   private:
    struct unchecked_tag {};
    explicit FiniteQuandle(unchecked_tag) {}

    std::size_t                _order = 0;
    std::vector<std::uint32_t> _op;
    std::vector<std::uint32_t> _op_inv;
    std::vector<std::string>   _names;
  };

  // Element x of Q becomes new_of[x] in the result.
  inline FiniteQuandle relabel(FiniteQuandle const& Q, std::vector<std::size_t> const& new_of) {
    std::size_t const n = Q.order();
    Table             t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[new_of[x]][new_of[y]] = new_of[Q.op(x, y)];
      }
    }
    return FiniteQuandle::from_table(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Inner automorphisms and orbits
  ////////////////////////////////////////////////////////////////////////

  // S_x : y -> y*x
  inline Permutation inner_symmetry(FiniteQuandle const& Q, std::size_t x) {
    std::vector<std::size_t> v(Q.order());
    for (std::size_t y = 0; y < Q.order(); ++y) {
      v[y] = Q.op(y, x);
    }
    return Permutation(std::move(v));
  }

  struct PermutationGroup {
    std::vector<Permutation> elements;    // elements[0] is the identity
    std::vector<std::size_t> generators;  // generators[x] = index of S_x

    std::size_t order() const noexcept {
      return elements.size();
    }
  };

  inline PermutationGroup inn_group(FiniteQuandle const& Q, std::size_t limit = 1'000'000) {
    std::size_t const        n = Q.order();
    std::vector<Permutation> gens;
    for (std::size_t x = 0; x < n; ++x) {
      gens.push_back(inner_symmetry(Q, x));
    }
    PermutationGroup                                  G;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    auto add = [&](Permutation p) {
      auto [it, inserted] = index.emplace(p, G.elements.size());
      if (inserted) {
        if (G.elements.size() >= limit) {
          throw closure_limit_exceeded("Inn(Q) exceeds " + std::to_string(limit) + " elements");
        }
        G.elements.push_back(std::move(p));
      }
      return it->second;
    };
    add(Permutation::identity(n));
    for (auto const& g : gens) {
      G.generators.push_back(add(g));
    }
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
      for (auto const& g : gens) {
        add(G.elements[i] * g);
      }
    }
    return G;
  }

  // Orbits of the Inn(Q)-action, ordered by least element, blocks ascending.
  inline Partition orbits(FiniteQuandle const& Q) {
    std::size_t const        n = Q.order();
    std::vector<std::size_t> comp(n, n);
    Partition                out;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] != n) {
        continue;
      }
      std::vector<std::size_t> block{s};
      comp[s] = out.size();
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t y = 0; y < n; ++y) {
          for (auto z : {Q.op(block[i], y), Q.op_inv(block[i], y)}) {
            if (comp[z] == n) {
              comp[z] = out.size();
              block.push_back(z);
            }
          }
        }
      }
      std::sort(block.begin(), block.end());
      out.push_back(std::move(block));
    }
    return out;
  }

  inline std::vector<std::size_t> orbit_index(FiniteQuandle const& Q) {
    std::vector<std::size_t> idx(Q.order());
    auto                     orb = orbits(Q);
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (auto x : orb[k]) {
        idx[x] = k;
      }
    }
    return idx;
  }

  inline bool is_connected(FiniteQuandle const& Q) {
    return orbits(Q).size() == 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  struct Predicates {
    bool is_commutative;
    bool is_latin;
    bool is_trivial;
    // x*y = x implies y*x = y for all x, y; necessary for being a
    // (G,A)-quandle.
    bool ga_obstruction_pass;
  };

  inline bool is_commutative(FiniteQuandle const& Q) {
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = x + 1; y < Q.order(); ++y) {
        if (Q.op(x, y) != Q.op(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  // Every left translation z -> y*z is a bijection (columns already are).
  inline bool is_latin(FiniteQuandle const& Q) {
    std::size_t const n = Q.order();
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<char> seen(n, 0);
      for (std::size_t z = 0; z < n; ++z) {
        auto v = Q.op(y, z);
        if (seen[v]) {
          return false;
        }
        seen[v] = 1;
      }
    }
    return true;
  }

  inline bool is_trivial(FiniteQuandle const& Q) {
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = 0; y < Q.order(); ++y) {
        if (Q.op(x, y) != x) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::optional<std::pair<std::size_t, std::size_t>> ga_obstruction_witness(FiniteQuandle const& Q) {
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = 0; y < Q.order(); ++y) {
        if (Q.op(x, y) == x && Q.op(y, x) != y) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  inline Predicates predicates(FiniteQuandle const& Q) {
    return {is_commutative(Q), is_latin(Q), is_trivial(Q), !ga_obstruction_witness(Q).has_value()};
  }

  // x -> S_x injective
  inline bool inner_map_injective(FiniteQuandle const& Q) {
    std::vector<Permutation> seen;
    for (std::size_t x = 0; x < Q.order(); ++x) {
      auto s = inner_symmetry(Q, x);
      if (std::find(seen.begin(), seen.end(), s) != seen.end()) {
        return false;
      }
      seen.push_back(std::move(s));
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_congruence_order = 12;

  // block_of[x] numbers blocks in order of first appearance.
  struct Congruence {
    std::vector<std::size_t> block_of;

    std::size_t num_blocks() const {
      return block_of.empty() ? 0 : *std::max_element(block_of.begin(), block_of.end()) + 1;
    }

    Partition blocks() const {
      Partition p(num_blocks());
      for (std::size_t x = 0; x < block_of.size(); ++x) {
        p[block_of[x]].push_back(x);
      }
      return p;
    }

    bool operator==(Congruence const&) const = default;
    auto operator<=>(Congruence const&) const = default;
  };

  namespace detail {
    struct UnionFind {
      std::vector<std::size_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) {
          parent[i] = i;
        }
      }

      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      // Keeps the smaller root so representatives are canonical.
      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent[b] = a;
        return true;
      }
    };

    inline Congruence normalize(UnionFind& uf, std::size_t n) {
      Congruence               c;
      std::vector<std::size_t> label(n, n);
      std::size_t              next = 0;
      c.block_of.resize(n);
      for (std::size_t x = 0; x < n; ++x) {
        auto r = uf.find(x);
        if (label[r] == n) {
          label[r] = next++;
        }
        c.block_of[x] = label[r];
      }
      return c;
    }
  }  // namespace detail

  // Smallest congruence containing base and identifying every given pair.
  inline Congruence congruence_closure(FiniteQuandle const&                                    Q,
                                       Congruence const&                                       base,
                                       std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    std::size_t const                                n = Q.order();
    detail::UnionFind                                uf(n);
    std::vector<std::pair<std::size_t, std::size_t>> work;
    auto merge = [&](std::size_t a, std::size_t b) {
      if (uf.unite(a, b)) {
        work.emplace_back(a, b);
      }
    };
    std::vector<std::size_t> first(base.num_blocks(), n);
    for (std::size_t x = 0; x < n; ++x) {
      auto b = base.block_of[x];
      if (first[b] == n) {
        first[b] = x;
      } else {
        merge(first[b], x);
      }
    }
    for (auto [a, b] : pairs) {
      merge(a, b);
    }
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      for (std::size_t c = 0; c < n; ++c) {
        merge(Q.op(a, c), Q.op(b, c));
        merge(Q.op(c, a), Q.op(c, b));
      }
    }
    return detail::normalize(uf, n);
  }

  inline Congruence discrete_congruence(std::size_t n) {
    Congruence c;
    c.block_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      c.block_of[i] = i;
    }
    return c;
  }

  // Every congruence of Q, sorted; closure under joins with principal
  // congruences starting from the discrete partition.
  inline std::vector<Congruence> congruences(FiniteQuandle const& Q) {
    std::size_t const n = Q.order();
    if (n > max_congruence_order) {
      throw order_limit_exceeded("congruence enumeration needs order <= "
                                 + std::to_string(max_congruence_order));
    }
    std::vector<Congruence> found{discrete_congruence(n)};
    std::map<Congruence, bool> seen{{found[0], true}};
    for (std::size_t i = 0; i < found.size(); ++i) {
      Congruence const cur = found[i];
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          if (cur.block_of[a] == cur.block_of[b]) {
            continue;
          }
          auto c = congruence_closure(Q, cur, {{a, b}});
          if (seen.emplace(c, true).second) {
            found.push_back(std::move(c));
          }
        }
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  // Simple means the only congruences are the discrete and full ones.
  inline bool is_simple(FiniteQuandle const& Q) {
    std::size_t const n = Q.order();
    if (n > max_congruence_order) {
      throw order_limit_exceeded("is_simple needs order <= " + std::to_string(max_congruence_order));
    }
    auto const disc = discrete_congruence(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (congruence_closure(Q, disc, {{a, b}}).num_blocks() != 1) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism and isomorphism search
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_iso_order = 24;

  namespace detail {
    inline constexpr std::size_t unassigned = static_cast<std::size_t>(-1);

    // Backtracking over maps Q -> P with forced propagation of
    // f(x*y) = f(x)*f(y) and f(x*^{-1}y) = f(x)*^{-1}f(y). Elements are
    // branched in ascending order and candidates tried ascending, so
    // solutions appear in lexicographic order.
    class MapSearch {
     public:
      MapSearch(FiniteQuandle const& Q, FiniteQuandle const& P, bool injective, std::size_t budget)
          : _Q(Q), _P(P), _injective(injective), _budget(budget), _f(Q.order(), unassigned),
            _finv(P.order(), unassigned) {}

      // colors restrict f(x) to targets with equal color
      void set_colors(std::vector<std::size_t> qc, std::vector<std::size_t> pc) {
        _qcolor = std::move(qc);
        _pcolor = std::move(pc);
      }

      // Elements are branched in this order instead of ascending.
      void set_branch_order(std::vector<std::size_t> order) {
        _branch_order = std::move(order);
      }

      // f(x) may only take values y with allowed[y] != 0
      void restrict_images(std::size_t x, std::vector<char> allowed) {
        _allowed.resize(_Q.order());
        _allowed[x] = std::move(allowed);
      }

      template <typename Visit>
      void run(Visit&& visit) {
        _stop = false;
        dfs(visit);
      }

      std::size_t nodes() const noexcept {
        return _nodes;
      }

     private:
      bool assign(std::size_t x, std::size_t y, std::vector<std::size_t>& queue) {
        if (_f[x] != unassigned) {
          return _f[x] == y;
        }
        if (_injective && _finv[y] != unassigned) {
          return false;
        }
        if (!_qcolor.empty() && _qcolor[x] != _pcolor[y]) {
          return false;
        }
        if (!_allowed.empty() && !_allowed[x].empty() && !_allowed[x][y]) {
          return false;
        }
        _f[x] = y;
        if (_injective) {
          _finv[y] = x;
        }
        _trail.push_back(x);
        queue.push_back(x);
        return true;
      }

      bool propagate(std::vector<std::size_t>& queue) {
        while (!queue.empty()) {
          std::size_t x = queue.back();
          queue.pop_back();
          for (std::size_t z = 0; z < _Q.order(); ++z) {
            if (_f[z] == unassigned) {
              continue;
            }
            if (!assign(_Q.op(x, z), _P.op(_f[x], _f[z]), queue)
                || !assign(_Q.op(z, x), _P.op(_f[z], _f[x]), queue)
                || !assign(_Q.op_inv(x, z), _P.op_inv(_f[x], _f[z]), queue)
                || !assign(_Q.op_inv(z, x), _P.op_inv(_f[z], _f[x]), queue)) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          auto x = _trail.back();
          _trail.pop_back();
          if (_injective) {
            _finv[_f[x]] = unassigned;
          }
          _f[x] = unassigned;
        }
      }

      template <typename Visit>
      void dfs(Visit& visit) {
        if (_stop) {
          return;
        }
        if (++_nodes > _budget) {
          throw search_limit_exceeded("map search exceeded budget of " + std::to_string(_budget) + " nodes");
        }
        std::size_t x = _Q.order();
        if (_branch_order.empty()) {
          x = 0;
          while (x < _Q.order() && _f[x] != unassigned) {
            ++x;
          }
        } else {
          for (auto b : _branch_order) {
            if (_f[b] == unassigned) {
              x = b;
              break;
            }
          }
        }
        if (x == _Q.order()) {
          if (!visit(_f)) {
            _stop = true;
          }
          return;
        }
        for (std::size_t y = 0; y < _P.order() && !_stop; ++y) {
          std::size_t const        mark = _trail.size();
          std::vector<std::size_t> queue;
          if (assign(x, y, queue) && propagate(queue)) {
            dfs(visit);
          }
          undo(mark);
        }
      }

      FiniteQuandle const&     _Q;
      FiniteQuandle const&     _P;
      bool                     _injective;
      std::size_t              _budget;
      std::size_t              _nodes = 0;
      bool                     _stop  = false;
      std::vector<std::size_t> _f, _finv, _trail;
      std::vector<std::size_t> _qcolor, _pcolor;
      std::vector<std::vector<char>> _allowed;
      std::vector<std::size_t>       _branch_order;
    };

    // Isomorphism-invariant colouring of the disjoint union of Q and P:
    // start from (orbit size, cycle type of S_x, |{y : x*y = x}|), then
    // refine by the colours of rows and columns until stable.
    inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
    joint_colors(FiniteQuandle const& Q, FiniteQuandle const& P) {
      using Key = std::vector<std::size_t>;
      std::map<Key, std::size_t> dict;
      auto intern = [&](Key const& k) { return dict.emplace(k, dict.size()).first->second; };
      auto initial = [&](FiniteQuandle const& R) {
        auto                     orb = orbits(R);
        std::vector<std::size_t> osize(R.order());
        for (auto const& b : orb) {
          for (auto x : b) {
            osize[x] = b.size();
          }
        }
        std::vector<std::size_t> c(R.order());
        for (std::size_t x = 0; x < R.order(); ++x) {
          Key k{osize[x]};
          auto ct = inner_symmetry(R, x).cycle_type();
          k.push_back(ct.size());
          k.insert(k.end(), ct.begin(), ct.end());
          std::size_t rowfix = 0;
          for (std::size_t y = 0; y < R.order(); ++y) {
            rowfix += R.op(x, y) == x;
          }
          k.push_back(rowfix);
          c[x] = intern(k);
        }
        return c;
      };
      auto qc = initial(Q);
      auto pc = initial(P);
      auto count = [](std::vector<std::size_t> const& a, std::vector<std::size_t> const& b) {
        std::unordered_set<std::size_t> s(a.begin(), a.end());
        s.insert(b.begin(), b.end());
        return s.size();
      };
      std::size_t classes = count(qc, pc);
      while (true) {
        dict.clear();
        auto refine = [&](FiniteQuandle const& R, std::vector<std::size_t> const& c) {
          std::vector<std::size_t> out(R.order());
          for (std::size_t x = 0; x < R.order(); ++x) {
            std::vector<std::pair<std::size_t, std::size_t>> row, col;
            for (std::size_t y = 0; y < R.order(); ++y) {
              row.emplace_back(c[R.op(x, y)], c[y]);
              col.emplace_back(c[R.op(y, x)], c[y]);
            }
            std::sort(row.begin(), row.end());
            std::sort(col.begin(), col.end());
            Key k{c[x]};
            for (auto [a, b] : row) {
              k.push_back(a);
              k.push_back(b);
            }
            k.push_back(static_cast<std::size_t>(-1));
            for (auto [a, b] : col) {
              k.push_back(a);
              k.push_back(b);
            }
            out[x] = intern(k);
          }
          return out;
        };
        auto nq = refine(Q, qc);
        auto np = refine(P, pc);
        std::size_t next = count(nq, np);
        qc = std::move(nq);
        pc = std::move(np);
        if (next == classes) {
          break;
        }
        classes = next;
      }
      return {qc, pc};
    }
  }  // namespace detail

  // Every homomorphism Q -> P, in lexicographic order of image vectors.
  inline std::vector<std::vector<std::size_t>> homomorphisms(FiniteQuandle const& Q, FiniteQuandle const& P,
                                                             std::size_t budget = default_search_budget()) {
    std::vector<std::vector<std::size_t>> out;
    detail::MapSearch                     s(Q, P, false, budget);
    s.run([&](std::vector<std::size_t> const& f) {
      out.push_back(f);
      return true;
    });
    return out;
  }

  inline bool is_homomorphism(FiniteQuandle const& Q, FiniteQuandle const& P, std::vector<std::size_t> const& f) {
    if (f.size() != Q.order()) {
      return false;
    }
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = 0; y < Q.order(); ++y) {
        if (f[Q.op(x, y)] != P.op(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_isomorphism(FiniteQuandle const& Q, FiniteQuandle const& P, std::vector<std::size_t> const& f) {
    if (Q.order() != P.order() || !is_homomorphism(Q, P, f)) {
      return false;
    }
    std::vector<char> seen(P.order(), 0);
    for (auto y : f) {
      if (seen[y]) {
        return false;
      }
      seen[y] = 1;
    }
    return true;
  }

  // Lexicographically first isomorphism Q -> P, or nothing.
  inline std::optional<std::vector<std::size_t>> is_isomorphic(FiniteQuandle const& Q, FiniteQuandle const& P,
                                                               std::size_t budget = default_search_budget()) {
    if (Q.order() != P.order()) {
      return std::nullopt;
    }
    if (Q.order() > max_iso_order) {
      throw search_limit_exceeded("isomorphism search needs order <= " + std::to_string(max_iso_order));
    }
    auto [qc, pc] = detail::joint_colors(Q, P);
    auto hq = qc, hp = pc;
    std::sort(hq.begin(), hq.end());
    std::sort(hp.begin(), hp.end());
    if (hq != hp) {
      return std::nullopt;
    }
    std::optional<std::vector<std::size_t>> witness;
    detail::MapSearch                       s(Q, P, true, budget);
    s.set_colors(std::move(qc), std::move(pc));
    s.run([&](std::vector<std::size_t> const& f) {
      witness = f;
      return false;
    });
    return witness;
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and subquandles
  ////////////////////////////////////////////////////////////////////////

  // Element (a, x) is numbered a * |P| + x.
  inline FiniteQuandle direct_product(FiniteQuandle const& Q, FiniteQuandle const& P) {
    std::size_t const n = Q.order() * P.order();
    if (n > max_quandle_order) {
      throw size_overflow("direct product order " + std::to_string(n) + " exceeds limit");
    }
    std::size_t const m = P.order();
    Table             t(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x][y] = Q.op(x / m, y / m) * m + P.op(x % m, y % m);
      }
    }
    return FiniteQuandle::from_table(t);
  }

  inline bool is_subquandle(FiniteQuandle const& Q, std::vector<std::size_t> const& subset) {
    std::vector<char> in(Q.order(), 0);
    for (auto x : subset) {
      if (x >= Q.order()) {
        throw invalid_argument("subset element out of range");
      }
      in[x] = 1;
    }
    for (auto x : subset) {
      for (auto y : subset) {
        if (!in[Q.op(x, y)]) {
          return false;
        }
      }
    }
    return !subset.empty();
  }

  // Restriction of Q to a subset closed under *; element i of the result is
  // the i-th smallest member of subset.
  inline FiniteQuandle subquandle(FiniteQuandle const& Q, std::vector<std::size_t> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (!is_subquandle(Q, subset)) {
      throw not_a_subquandle("subset is not closed under the quandle operation");
    }
    std::vector<std::size_t> pos(Q.order(), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      pos[subset[i]] = i;
    }
    Table                    t(subset.size(), std::vector<std::size_t>(subset.size()));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (!Q.names().empty()) {
        names.push_back(Q.name(subset[i]));
      }
      for (std::size_t j = 0; j < subset.size(); ++j) {
        t[i][j] = pos[Q.op(subset[i], subset[j])];
      }
    }
    return FiniteQuandle::from_table(t, std::move(names));
  }

  inline bool is_normal_subquandle(FiniteQuandle const& Q, std::vector<std::size_t> const& subset) {
    if (!is_subquandle(Q, subset)) {
      throw not_a_subquandle("subset is not closed under the quandle operation");
    }
    std::vector<char> in(Q.order(), 0);
    for (auto x : subset) {
      in[x] = 1;
    }
    for (auto p : subset) {
      for (std::size_t q = 0; q < Q.order(); ++q) {
        if (!in[Q.op(p, q)]) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace qf
