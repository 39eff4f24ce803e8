#pragma once

// Finite groups stored as full multiplication tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace qf {

  // Groups above this order are refused; every desk-scale check fits below.
  inline constexpr std::size_t max_group_order = 10'000;

  class FiniteGroup {
   public:
    using element_type = std::size_t;

    FiniteGroup() : FiniteGroup(trivial_()) {}

    // Validates closure, identity, inverses and associativity. Identity and
    // inverses are recomputed from the table.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> const& table,
                                  std::vector<std::string>                     labels = {}) {
      std::size_t const n = table.size();
      check_order(n);
      std::vector<std::uint16_t> mul(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) {
          throw invalid_argument("group table is not square (row " + std::to_string(a) + ")");
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (table[a][b] >= n) {
            throw invalid_argument("group table entry out of range at (" + std::to_string(a) + ","
                                   + std::to_string(b) + ")");
          }
          mul[a * n + b] = static_cast<std::uint16_t>(table[a][b]);
        }
      }
      return FiniteGroup(n, std::move(mul), std::move(labels), {});
    }

    std::size_t order() const noexcept {
      return _order;
    }

    element_type identity() const noexcept {
      return _identity;
    }

    element_type mul(element_type a, element_type b) const noexcept {
      return _mul[a * _order + b];
    }

    element_type inv(element_type a) const noexcept {
      return _inv[a];
    }

    std::string label(element_type a) const {
      return _labels.empty() ? std::to_string(a) : _labels[a];
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::optional<element_type> find_label(std::string const& name) const {
      auto it = std::find(_labels.begin(), _labels.end(), name);
      if (it == _labels.end()) {
        return std::nullopt;
      }
      return static_cast<element_type>(it - _labels.begin());
    }

    std::vector<std::vector<std::size_t>> table() const {
      std::vector<std::vector<std::size_t>> t(_order, std::vector<std::size_t>(_order));
      for (std::size_t a = 0; a < _order; ++a) {
        for (std::size_t b = 0; b < _order; ++b) {
          t[a][b] = mul(a, b);
        }
      }
      return t;
    }

    bool is_abelian() const noexcept {
      for (std::size_t a = 0; a < _order; ++a) {
        for (std::size_t b = a + 1; b < _order; ++b) {
          if (mul(a, b) != mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    }

    bool operator==(FiniteGroup const& other) const {
      return _order == other._order && _mul == other._mul;
    }

    // Trusted path for constructions whose generators are known; the table
    // is still validated, the generators only speed up the associativity test.
    static FiniteGroup from_generated_table(std::size_t                 n,
                                            std::vector<std::uint16_t>  mul,
                                            std::vector<std::string>    labels,
                                            std::vector<element_type>   generators) {
      return FiniteGroup(n, std::move(mul), std::move(labels), std::move(generators));
    }

    static void check_order(std::size_t n) {
      if (n == 0) {
        throw invalid_argument("group order must be positive");
      }
      if (n > max_group_order) {
        throw size_overflow("group order " + std::to_string(n) + " exceeds limit "
                            + std::to_string(max_group_order));
      }
    }

   private:
    FiniteGroup(std::size_t                n,
                std::vector<std::uint16_t> mul,
                std::vector<std::string>   labels,
                std::vector<element_type>  generators)
        : _order(n), _mul(std::move(mul)), _labels(std::move(labels)) {
      if (!_labels.empty() && _labels.size() != n) {
        throw invalid_argument("label count does not match group order");
      }
      validate(generators);
    }

    static FiniteGroup trivial_() {
      return FiniteGroup(1, std::vector<std::uint16_t>{0}, {"e"}, {});
    }

    void validate(std::vector<element_type> const& hint) {
      std::size_t const n = _order;
      // identity: the unique e with e*a = a*e = a
      std::optional<element_type> e;
      for (std::size_t c = 0; c < n && !e; ++c) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          ok = mul(c, a) == a && mul(a, c) == a;
        }
        if (ok) {
          e = c;
        }
      }
      if (!e) {
        throw invalid_argument("group table has no identity element");
      }
      _identity = *e;
      _inv.assign(n, n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (mul(a, b) == _identity) {
            if (mul(b, a) != _identity) {
              throw invalid_argument("element " + std::to_string(a)
                                     + " has a one-sided inverse only");
            }
            _inv[a] = b;
            break;
          }
        }
        if (_inv[a] == n) {
          throw invalid_argument("element " + std::to_string(a) + " has no inverse");
        }
      }
      check_associative(hint);
    }

    // Triple loop for small orders; otherwise Light's test over a set that
    // generates the table under left-nested products (exact, not sampled).
    void check_associative(std::vector<element_type> const& hint) const {
      std::size_t const n = _order;
      auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
        throw invalid_argument("group table is not associative at (" + std::to_string(a) + ","
                               + std::to_string(b) + "," + std::to_string(c) + ")");
      };
      if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            std::size_t const ab = mul(a, b);
            for (std::size_t c = 0; c < n; ++c) {
              if (mul(ab, c) != mul(a, mul(b, c))) {
                fail(a, b, c);
              }
            }
          }
        }
        return;
      }
      // sampled pre-check catches gross errors cheaply
      std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int i = 0; i < 4096; ++i) {
        std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          fail(a, b, c);
        }
      }
      std::vector<element_type> gens;
      std::vector<char>         reached(n, 0);
      std::vector<element_type> reached_list;
      auto extend = [&](element_type g) {
        gens.push_back(g);
        // left-nested closure: everything of the form ((g1 g2) g3) ...
        std::vector<element_type> frontier;
        for (auto s : gens) {
          if (!reached[s]) {
            reached[s] = 1;
            reached_list.push_back(s);
          }
        }
        frontier = reached_list;
        while (!frontier.empty()) {
          std::vector<element_type> next;
          for (auto x : frontier) {
            for (auto s : gens) {
              auto y = mul(x, s);
              if (!reached[y]) {
                reached[y] = 1;
                reached_list.push_back(y);
                next.push_back(y);
              }
            }
          }
          frontier = std::move(next);
        }
      };
      for (auto g : hint) {
        if (g < n && !reached[g]) {
          extend(g);
        }
      }
      for (std::size_t g = 0; g < n && reached_list.size() < n; ++g) {
        if (!reached[g]) {
          extend(g);
        }
      }
      for (auto s : gens) {
        for (std::size_t a = 0; a < n; ++a) {
          std::size_t const as = mul(a, s);
          for (std::size_t b = 0; b < n; ++b) {
            if (mul(as, b) != mul(a, mul(s, b))) {
              fail(a, s, b);
            }
          }
        }
      }
    }

    std::size_t                _order = 1;
    std::vector<std::uint16_t> _mul;
    std::vector<std::string>   _labels;
    element_type               _identity = 0;
    std::vector<element_type>  _inv;
  };

  ////////////////////////////////////////////////////////////////////////
  // Queries
  ////////////////////////////////////////////////////////////////////////

  // g^{-1} x g
  inline std::size_t conjugate(FiniteGroup const& G, std::size_t x, std::size_t g) {
    return G.mul(G.mul(G.inv(g), x), g);
  }

  // [a,b] = a^{-1} b^{-1} a b
  inline std::size_t commutator(FiniteGroup const& G, std::size_t a, std::size_t b) {
    return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
  }

  inline std::size_t power(FiniteGroup const& G, std::size_t a, long long k) {
    std::size_t base = k < 0 ? G.inv(a) : a;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                                 : static_cast<unsigned long long>(k);
    std::size_t result = G.identity();
    while (e > 0) {
      if (e & 1ULL) {
        result = G.mul(result, base);
      }
      base = G.mul(base, base);
      e >>= 1;
    }
    return result;
  }

  inline std::size_t element_order(FiniteGroup const& G, std::size_t a) {
    std::size_t k = 1;
    for (std::size_t x = a; x != G.identity(); x = G.mul(x, a)) {
      ++k;
    }
    return k;
  }

  inline std::vector<std::size_t> centralizer(FiniteGroup const& G, std::size_t a) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < G.order(); ++x) {
      if (G.mul(x, a) == G.mul(a, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  // Classes ordered by their least element; each class ascending.
  inline std::vector<std::vector<std::size_t>> conjugacy_classes(FiniteGroup const& G) {
    std::size_t const                     n = G.order();
    std::vector<char>                     seen(n, 0);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[x]) {
        continue;
      }
      std::vector<std::size_t> cls;
      for (std::size_t g = 0; g < n; ++g) {
        auto y = conjugate(G, x, g);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  inline std::vector<std::size_t> conjugacy_class_of(FiniteGroup const& G, std::size_t x) {
    std::vector<char>        seen(G.order(), 0);
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < G.order(); ++g) {
      auto y = conjugate(G, x, g);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    return cls;
  }

  // Elements of the subgroup generated by gens, ascending.
  inline std::vector<std::size_t> generated_subgroup(FiniteGroup const&              G,
                                                     std::vector<std::size_t> const& gens) {
    std::vector<char>        seen(G.order(), 0);
    std::vector<std::size_t> elems{G.identity()};
    seen[G.identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto g : gens) {
        auto y = G.mul(elems[i], g);
        if (!seen[y]) {
          seen[y] = 1;
          elems.push_back(y);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

  inline bool generates(FiniteGroup const& G, std::vector<std::size_t> const& gens) {
    return generated_subgroup(G, gens).size() == G.order();
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard groups
  ////////////////////////////////////////////////////////////////////////

  inline FiniteGroup cyclic_group(std::size_t k) {
    FiniteGroup::check_order(k);
    std::vector<std::uint16_t> mul(k * k);
    std::vector<std::string>   labels(k);
    for (std::size_t a = 0; a < k; ++a) {
      labels[a] = std::to_string(a);
      for (std::size_t b = 0; b < k; ++b) {
        mul[a * k + b] = static_cast<std::uint16_t>((a + b) % k);
      }
    }
    return FiniteGroup::from_generated_table(k, std::move(mul), std::move(labels), {k > 1 ? 1u : 0u});
  }

  // Symmetry group of the k-gon, order 2k. Elements 0..k-1 are r^i,
  // k..2k-1 are s r^i, and s r s = r^{-1}.
  inline FiniteGroup dihedral_group(std::size_t k) {
    if (k == 0) {
      throw invalid_argument("dihedral group needs k >= 1");
    }
    std::size_t const n = 2 * k;
    FiniteGroup::check_order(n);
    std::vector<std::uint16_t> mul(n * n);
    std::vector<std::string>   labels(n);
    auto enc = [k](bool refl, std::size_t i) { return static_cast<std::uint16_t>((refl ? k : 0) + i % k); };
    for (std::size_t x = 0; x < n; ++x) {
      bool const        rx = x >= k;
      std::size_t const a  = x % k;
      labels[x] = rx ? (a == 0 ? "s" : "s r^" + std::to_string(a)) : (a == 0 ? "e" : "r^" + std::to_string(a));
      for (std::size_t y = 0; y < n; ++y) {
        bool const        ry = y >= k;
        std::size_t const b  = y % k;
        std::uint16_t     v;
        if (!rx && !ry) {
          v = enc(false, a + b);
        } else if (!rx && ry) {  // r^a s r^b = s r^{b-a}
          v = enc(true, b + k - a);
        } else if (rx && !ry) {  // s r^a r^b = s r^{a+b}
          v = enc(true, a + b);
        } else {  // s r^a s r^b = r^{b-a}
          v = enc(false, b + k - a);
        }
        mul[x * n + y] = v;
      }
    }
    std::vector<std::size_t> gens{k};
    if (k > 1) {
      gens.push_back(1);
    }
    return FiniteGroup::from_generated_table(n, std::move(mul), std::move(labels), gens);
  }

  inline FiniteGroup direct_product(FiniteGroup const& G, FiniteGroup const& H) {
    std::size_t const n = G.order() * H.order();
    FiniteGroup::check_order(n);
    std::size_t const          m = H.order();
    std::vector<std::uint16_t> mul(n * n);
    std::vector<std::string>   labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = "(" + G.label(x / m) + "," + H.label(x % m) + ")";
      for (std::size_t y = 0; y < n; ++y) {
        mul[x * n + y] = static_cast<std::uint16_t>(G.mul(x / m, y / m) * m + H.mul(x % m, y % m));
      }
    }
    return FiniteGroup::from_generated_table(n, std::move(mul), std::move(labels), {});
  }

  inline FiniteGroup abelian_group(std::vector<std::size_t> const& factors) {
    if (factors.empty()) {
      return cyclic_group(1);
    }
    for (auto d : factors) {
      if (d == 0) {
        throw invalid_argument("abelian invariant factors must be >= 1");
      }
    }
    FiniteGroup G = cyclic_group(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      G = direct_product(G, cyclic_group(factors[i]));
    }
    return G;
  }

  namespace detail {
    inline std::string cycle_notation(std::vector<std::size_t> const& p) {
      std::string       out;
      std::vector<char> seen(p.size(), 0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) {
          continue;
        }
        out += "(";
        std::size_t j = i;
        bool        first = true;
        while (!seen[j]) {
          seen[j] = 1;
          out += (first ? "" : ",") + std::to_string(j + 1);
          first = false;
          j     = p[j];
        }
        out += ")";
      }
      return out.empty() ? "()" : out;
    }
  }  // namespace detail

  // Permutations of {1..k} in lexicographic order of image tuples. Products
  // act on the right: i^(xy) = (i^x)^y.
  inline FiniteGroup symmetric_group(std::size_t k) {
    if (k == 0 || k > 5) {
      throw invalid_argument("symmetric group needs 1 <= k <= 5");
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t const n = perms.size();
    auto index_of = [&](std::vector<std::size_t> const& q) {
      return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::uint16_t> mul(n * n);
    std::vector<std::string>   labels(n);
    std::vector<std::size_t>   q(k);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = detail::cycle_notation(perms[x]);
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t i = 0; i < k; ++i) {
          q[i] = perms[y][perms[x][i]];
        }
        mul[x * n + y] = static_cast<std::uint16_t>(index_of(q));
      }
    }
    return FiniteGroup::from_generated_table(n, std::move(mul), std::move(labels), {});
  }

  // Affine maps t -> a t + b of Z/k with a a unit, order k * phi(k).
  // Element (a,b) is listed by unit a ascending, then b; products act on
  // the right, so (a,b)(c,d) is t -> c(a t + b) + d.
  inline FiniteGroup affine_group(std::size_t k) {
    if (k < 2) {
      throw invalid_argument("affine group needs k >= 2");
    }
    std::vector<std::size_t> units;
    for (std::size_t a = 1; a < k; ++a) {
      if (std::gcd(a, k) == 1) {
        units.push_back(a);
      }
    }
    std::size_t const n = units.size() * k;
    FiniteGroup::check_order(n);
    std::vector<std::size_t> unit_index(k, 0);
    for (std::size_t i = 0; i < units.size(); ++i) {
      unit_index[units[i]] = i;
    }
    std::vector<std::uint16_t> mul(n * n);
    std::vector<std::string>   labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const a = units[x / k], b = x % k;
      labels[x] = std::to_string(a) + "t+" + std::to_string(b);
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const c = units[y / k], d = y % k;
        mul[x * n + y] = static_cast<std::uint16_t>(unit_index[(c * a) % k] * k + (c * b + d) % k);
      }
    }
    return FiniteGroup::from_generated_table(n, std::move(mul), std::move(labels), {});
  }

  // Group spec strings: factors joined by 'x', each one of
  //   Z<k> (cyclic), D<k> (dihedral of the k-gon, order 2k), S<k> (symmetric),
  //   A<k> (affine group of Z/k).
  // Example: "S3xZ4", "Z2xZ2", "D6".
  inline FiniteGroup parse_group_spec(std::string const& spec) {
    if (spec.empty()) {
      throw invalid_argument("empty group spec");
    }
    std::vector<std::string> parts;
    std::string              cur;
    for (char c : spec) {
      if (c == 'x' || c == 'X') {
        parts.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    parts.push_back(cur);
    std::optional<FiniteGroup> result;
    for (auto const& part : parts) {
      if (part.size() < 2) {
        throw invalid_argument("bad group spec component '" + part + "'");
      }
      std::size_t k;
      try {
        std::size_t pos;
        k = std::stoul(part.substr(1), &pos);
        if (pos + 1 != part.size()) {
          throw std::invalid_argument("trailing");
        }
      } catch (std::exception const&) {
        throw invalid_argument("bad group spec component '" + part + "'");
      }
      FiniteGroup G;
      switch (part[0]) {
        case 'Z':
        case 'C': G = cyclic_group(k); break;
        case 'D': G = dihedral_group(k); break;
        case 'S': G = symmetric_group(k); break;
        case 'A': G = affine_group(k); break;
        default: throw invalid_argument("bad group spec component '" + part + "'");
      }
      result = result ? direct_product(*result, G) : G;
    }
    return *result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Heisenberg model
  ////////////////////////////////////////////////////////////////////////

  // Finite class-2 group on triples (p,q,c), p,q mod P = n*m, c mod
  // d = gcd(n,m), with (p,q,c)(p',q',c') = (p+p', q+q', c+c'+q*p').
  // Every relation of the reduced presentation of G_{U(n,m)} holds for
  // x0 = (1,0,0), y0 = (0,1,0); the commutator [x0,y0] is (0,0,-1).
  struct HeisenbergModel {
    FiniteGroup group;
    std::size_t x0;
    std::size_t y0;
    std::size_t modulus;
    std::size_t center_order;
  };

  inline HeisenbergModel make_heisenberg_model(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) {
      throw invalid_argument("heisenberg model needs n, m >= 1");
    }
    if (n * m > 50) {
      throw size_overflow("heisenberg model needs n*m <= 50");
    }
    std::size_t const P     = n * m;
    std::size_t const d     = std::gcd(n, m);
    std::size_t const order = P * P * d;
    FiniteGroup::check_order(order);
    auto enc = [&](std::size_t p, std::size_t q, std::size_t c) { return (p * P + q) * d + c; };
    std::vector<std::uint16_t> mul(order * order);
    std::vector<std::string>   labels(order);
    for (std::size_t x = 0; x < order; ++x) {
      std::size_t const p = x / (P * d), q = (x / d) % P, c = x % d;
      labels[x] = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(c) + ")";
      for (std::size_t y = 0; y < order; ++y) {
        std::size_t const p2 = y / (P * d), q2 = (y / d) % P, c2 = y % d;
        mul[x * order + y] = static_cast<std::uint16_t>(enc((p + p2) % P, (q + q2) % P, (c + c2 + q * p2) % d));
      }
    }
    std::size_t const x0 = enc(1 % P, 0, 0), y0 = enc(0, 1 % P, 0);
    return HeisenbergModel{FiniteGroup::from_generated_table(order, std::move(mul), std::move(labels), {x0, y0}),
                           x0, y0, P, d};
  }

}  // namespace qf
