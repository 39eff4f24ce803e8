#pragma once

// Free racks and quandles, free products of finite groups, Q(G1*G2, A),
// and quandle presentations with bounded word-equality estimates.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "envelope.hpp"
#include "error.hpp"
#include "fingroup.hpp"
#include "quandle.hpp"
#include "word.hpp"

namespace qf {

  ////////////////////////////////////////////////////////////////////////
  // Free rack FR(X) = X x F(X) and free quandle FQ(X)
  ////////////////////////////////////////////////////////////////////////

  struct FreeRackElement {
    std::size_t base = 0;
    Word        word;

    bool operator==(FreeRackElement const&) const = default;
    auto operator<=>(FreeRackElement const&) const = default;
  };

  // (a,u) * (b,v) = (a, u v^{-1} b v)
  inline FreeRackElement fr_op(FreeRackElement const& p, FreeRackElement const& q) {
    Word w = p.word;
    auto vi = word_inverse(q.word);
    w.insert(w.end(), vi.begin(), vi.end());
    w.push_back({q.base, 1});
    w.insert(w.end(), q.word.begin(), q.word.end());
    return {p.base, free_reduce(w)};
  }

  // (a,u) *^{-1} (b,v) = (a, u v^{-1} b^{-1} v)
  inline FreeRackElement fr_op_inv(FreeRackElement const& p, FreeRackElement const& q) {
    Word w = p.word;
    auto vi = word_inverse(q.word);
    w.insert(w.end(), vi.begin(), vi.end());
    w.push_back({q.base, -1});
    w.insert(w.end(), q.word.begin(), q.word.end());
    return {p.base, free_reduce(w)};
  }

  // Canonical representative of (a,w) modulo (a,w) ~ (a,aw): the reduced
  // word with its leading power of a removed.
  using FreeQuandleElement = FreeRackElement;

  inline FreeQuandleElement fq_canonicalize(FreeRackElement const& p) {
    Word        w = free_reduce(p.word);
    std::size_t k = 0;
    while (k < w.size() && w[k].generator == p.base) {
      ++k;
    }
    return {p.base, Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end())};
  }

  inline FreeQuandleElement fq_op(FreeQuandleElement const& p, FreeQuandleElement const& q) {
    return fq_canonicalize(fr_op(p, q));
  }

  inline FreeQuandleElement fq_op_inv(FreeQuandleElement const& p, FreeQuandleElement const& q) {
    return fq_canonicalize(fr_op_inv(p, q));
  }

  inline bool fq_equal(FreeRackElement const& p, FreeRackElement const& q) {
    return fq_canonicalize(p) == fq_canonicalize(q);
  }

  inline constexpr std::size_t max_enumerated_elements = 2'000'000;

  // Letters ordered by generator, then positive before negative.
  inline bool letter_less(Letter const& a, Letter const& b) {
    if (a.generator != b.generator) {
      return a.generator < b.generator;
    }
    return a.exponent > b.exponent;
  }

  // Reduced words of length exactly len, in lexicographic letter order.
  inline std::vector<Word> reduced_words(std::size_t num_generators, std::size_t len) {
    std::vector<Word> cur{Word{}};
    for (std::size_t step = 0; step < len; ++step) {
      std::vector<Word> next;
      for (auto const& w : cur) {
        for (std::size_t g = 0; g < num_generators; ++g) {
          for (int e : {1, -1}) {
            if (!w.empty() && w.back().generator == g && w.back().exponent == -e) {
              continue;
            }
            auto v = w;
            v.push_back({g, e});
            next.push_back(std::move(v));
            if (next.size() > max_enumerated_elements) {
              throw size_overflow("word enumeration exceeds limit");
            }
          }
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  // Canonical elements with word length <= max_len, ordered by base, then
  // length, then lexicographically.
  inline std::vector<FreeQuandleElement> free_quandle_elements(std::size_t num_generators, std::size_t max_len) {
    std::vector<FreeQuandleElement> out;
    for (std::size_t a = 0; a < num_generators; ++a) {
      for (std::size_t len = 0; len <= max_len; ++len) {
        for (auto& w : reduced_words(num_generators, len)) {
          if (!w.empty() && w.front().generator == a) {
            continue;
          }
          out.push_back({a, std::move(w)});
          if (out.size() > max_enumerated_elements) {
            throw size_overflow("free quandle enumeration exceeds limit");
          }
        }
      }
    }
    return out;
  }

  inline std::string fr_to_string(FreeRackElement const& p, std::vector<std::string> const& names = {}) {
    auto nm = [&](std::size_t g) { return g < names.size() ? names[g] : "g" + std::to_string(g); };
    return "(" + nm(p.base) + ", " + word_to_string(p.word, names) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Free product G1 * G2 of finite groups
  ////////////////////////////////////////////////////////////////////////

  struct Syllable {
    int         factor;  // 0 or 1
    std::size_t element;

    bool operator==(Syllable const&) const = default;
    auto operator<=>(Syllable const&) const = default;
  };

  // Alternating non-identity syllables.
  using FreeProductWord = std::vector<Syllable>;

  class FreeProduct {
   public:
    FreeProduct(FiniteGroup G1, FiniteGroup G2) : _g{std::move(G1), std::move(G2)} {}

    FiniteGroup const& factor(int i) const {
      return _g[static_cast<std::size_t>(i)];
    }

    // Normal form of a word given as a list of (factor, element) pairs.
    FreeProductWord normalize(std::vector<Syllable> const& letters) const {
      FreeProductWord out;
      for (auto s : letters) {
        check(s);
        push(out, s);
      }
      return out;
    }

    FreeProductWord nf_mult(FreeProductWord const& a, FreeProductWord const& b) const {
      FreeProductWord out = a;
      for (auto s : b) {
        push(out, s);
      }
      return out;
    }

    FreeProductWord nf_inv(FreeProductWord const& w) const {
      FreeProductWord out;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back({it->factor, factor(it->factor).inv(it->element)});
      }
      return out;
    }

    // True iff w is empty or a single syllable of factor i commuting with a.
    bool in_factor_centralizer(FreeProductWord const& w, int i, std::size_t a) const {
      if (w.empty()) {
        return true;
      }
      if (w.size() != 1 || w[0].factor != i) {
        return false;
      }
      auto const& G = factor(i);
      return G.mul(w[0].element, a) == G.mul(a, w[0].element);
    }

    std::string to_string(FreeProductWord const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::string s;
      for (auto const& x : w) {
        if (!s.empty()) {
          s += ' ';
        }
        s += (x.factor == 0 ? "g:" : "h:") + factor(x.factor).label(x.element);
      }
      return s;
    }

   private:
    void check(Syllable s) const {
      if ((s.factor != 0 && s.factor != 1) || s.element >= factor(s.factor).order()) {
        throw invalid_argument("syllable out of range");
      }
    }

    void push(FreeProductWord& out, Syllable s) const {
      auto const& G = factor(s.factor);
      if (s.element == G.identity()) {
        return;
      }
      if (!out.empty() && out.back().factor == s.factor) {
        auto m = G.mul(out.back().element, s.element);
        out.pop_back();
        if (m != G.identity()) {
          out.push_back({s.factor, m});
        }
        return;
      }
      out.push_back(s);
    }

    FiniteGroup _g[2];
  };

  struct GAFreeElement {
    std::size_t     a_index;
    FreeProductWord word;

    bool operator==(GAFreeElement const&) const = default;
    auto operator<=>(GAFreeElement const&) const = default;
  };

  // Q(G1*G2, A) for A a list of non-identity factor elements. (a,u) and
  // (a,v) are equal iff u v^{-1} lies in C(a), which inside the free
  // product is C_{G_i}(a) for a in G_i.
  class GAFree {
   public:
    GAFree(FreeProduct F, std::vector<Syllable> A) : _F(std::move(F)), _A(std::move(A)) {
      for (std::size_t i = 0; i < _A.size(); ++i) {
        auto const s = _A[i];
        if ((s.factor != 0 && s.factor != 1) || s.element >= _F.factor(s.factor).order()) {
          throw invalid_argument("base element out of range");
        }
        if (s.element == _F.factor(s.factor).identity()) {
          throw identity_base_element("identity cannot be a base element");
        }
        for (std::size_t j = 0; j < i; ++j) {
          if (_A[j] == s) {
            throw duplicate_base_element("base element appears twice");
          }
        }
      }
    }

    FreeProduct const& product() const noexcept {
      return _F;
    }

    std::vector<Syllable> const& base() const noexcept {
      return _A;
    }

    // Replaces a leading syllable from a's factor by the canonical
    // representative of its coset C(a) s: dropped if the coset contains the
    // identity, otherwise the least element index.
    GAFreeElement canonical(std::size_t a_index, FreeProductWord w) const {
      auto const  a = _A.at(a_index);
      auto const& G = _F.factor(a.factor);
      if (!w.empty() && w.front().factor == a.factor) {
        auto const  s    = w.front().element;
        std::size_t best = G.order();
        bool        has_identity = false;
        for (std::size_t c = 0; c < G.order(); ++c) {
          if (G.mul(c, a.element) == G.mul(a.element, c)) {
            auto cs = G.mul(c, s);
            has_identity = has_identity || cs == G.identity();
            best         = std::min(best, cs);
          }
        }
        if (has_identity) {
          w.erase(w.begin());
        } else {
          w.front().element = best;
        }
      }
      return {a_index, std::move(w)};
    }

    GAFreeElement element(std::size_t a_index, FreeProductWord const& u) const {
      return canonical(a_index, _F.normalize(u));
    }

    bool equal(GAFreeElement const& p, GAFreeElement const& q) const {
      if (p.a_index != q.a_index) {
        return false;
      }
      auto const a = _A[p.a_index];
      return _F.in_factor_centralizer(_F.nf_mult(p.word, _F.nf_inv(q.word)), a.factor, a.element);
    }

    // (a,u)*(b,v) = (a, u v^{-1} b v)
    GAFreeElement op(GAFreeElement const& p, GAFreeElement const& q) const {
      return apply(p, q, false);
    }

    // (a,u)*^{-1}(b,v) = (a, u v^{-1} b^{-1} v)
    GAFreeElement op_inv(GAFreeElement const& p, GAFreeElement const& q) const {
      return apply(p, q, true);
    }

    // Elements reachable from p in at most `depth` steps, each step applying
    // S_q or S_q^{-1} for q = (c, g), c in A and g the identity or a single
    // syllable. Listed in discovery order.
    std::vector<GAFreeElement> orbit_of(GAFreeElement const& p, std::size_t depth) const {
      std::vector<GAFreeElement> movers;
      for (std::size_t c = 0; c < _A.size(); ++c) {
        movers.push_back({c, {}});
        for (int f = 0; f < 2; ++f) {
          auto const& G = _F.factor(f);
          for (std::size_t g = 0; g < G.order(); ++g) {
            if (g != G.identity()) {
              movers.push_back(canonical(c, {{f, g}}));
            }
          }
        }
      }
      std::sort(movers.begin(), movers.end());
      movers.erase(std::unique(movers.begin(), movers.end()), movers.end());

      auto                       start = canonical(p.a_index, p.word);
      std::set<GAFreeElement>    seen{start};
      std::vector<GAFreeElement> out{start}, frontier{start};
      for (std::size_t d = 0; d < depth; ++d) {
        std::vector<GAFreeElement> next;
        for (auto const& x : frontier) {
          for (auto const& q : movers) {
            for (auto const& y : {op(x, q), op_inv(x, q)}) {
              if (seen.insert(y).second) {
                out.push_back(y);
                next.push_back(y);
                if (out.size() > max_enumerated_elements) {
                  throw size_overflow("orbit enumeration exceeds limit");
                }
              }
            }
          }
        }
        frontier = std::move(next);
      }
      return out;
    }

    std::string to_string(GAFreeElement const& p) const {
      auto const a = _A[p.a_index];
      return "(" + std::string(a.factor == 0 ? "g:" : "h:") + _F.factor(a.factor).label(a.element) + ", "
           + _F.to_string(p.word) + ")";
    }

   private:
    GAFreeElement apply(GAFreeElement const& p, GAFreeElement const& q, bool inverse) const {
      auto const b  = _A.at(q.a_index);
      auto const bb = inverse ? _F.factor(b.factor).inv(b.element) : b.element;
      auto       w  = _F.nf_mult(_F.nf_mult(p.word, _F.nf_inv(q.word)), _F.nf_mult({{b.factor, bb}}, q.word));
      return canonical(p.a_index, std::move(w));
    }

    FreeProduct           _F;
    std::vector<Syllable> _A;
  };

  inline GAFree ga_free(FiniteGroup const& G1, FiniteGroup const& G2, std::vector<Syllable> const& A) {
    return GAFree(FreeProduct(G1, G2), A);
  }

  ////////////////////////////////////////////////////////////////////////
  // Quandle words and presentations
  ////////////////////////////////////////////////////////////////////////

  // word := NAME | (op word word) | (opinv word word)
  struct QuandleWord {
    enum class Kind { generator, op, op_inv };

    Kind                     kind = Kind::generator;
    std::string              name;  // generator only
    std::vector<QuandleWord> args;  // two operands otherwise

    static QuandleWord generator(std::string n) {
      QuandleWord w;
      w.name = std::move(n);
      return w;
    }

    static QuandleWord make(Kind k, QuandleWord a, QuandleWord b) {
      QuandleWord w;
      w.kind = k;
      w.args = {std::move(a), std::move(b)};
      return w;
    }

    std::size_t depth() const {
      if (kind == Kind::generator) {
        return 0;
      }
      return 1 + std::max(args[0].depth(), args[1].depth());
    }

    bool operator==(QuandleWord const&) const = default;
  };

  inline std::string to_string(QuandleWord const& w) {
    switch (w.kind) {
      case QuandleWord::Kind::generator: return w.name;
      case QuandleWord::Kind::op: return "(op " + to_string(w.args[0]) + " " + to_string(w.args[1]) + ")";
      case QuandleWord::Kind::op_inv: return "(opinv " + to_string(w.args[0]) + " " + to_string(w.args[1]) + ")";
    }
    return "?";
  }

  namespace detail {
    inline bool is_name_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    inline bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    class WordParser {
     public:
      explicit WordParser(std::string const& s) : _s(s) {}

      QuandleWord parse() {
        auto w = word();
        skip();
        if (_i != _s.size()) {
          fail("trailing input");
        }
        return w;
      }

     private:
      void skip() {
        while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw invalid_argument("bad quandle word '" + _s + "': " + what + " at offset " + std::to_string(_i));
      }

      std::string name() {
        skip();
        if (_i >= _s.size() || !is_name_start(_s[_i])) {
          fail("expected a name");
        }
        std::size_t b = _i;
        while (_i < _s.size() && is_name_char(_s[_i])) {
          ++_i;
        }
        return _s.substr(b, _i - b);
      }

      QuandleWord word() {
        skip();
        if (_i < _s.size() && _s[_i] == '(') {
          ++_i;
          auto const head = name();
          QuandleWord::Kind k;
          if (head == "op") {
            k = QuandleWord::Kind::op;
          } else if (head == "opinv") {
            k = QuandleWord::Kind::op_inv;
          } else {
            fail("expected op or opinv");
          }
          auto a = word();
          auto b = word();
          skip();
          if (_i >= _s.size() || _s[_i] != ')') {
            fail("expected ')'");
          }
          ++_i;
          return QuandleWord::make(k, std::move(a), std::move(b));
        }
        auto n = name();
        if (n == "op" || n == "opinv") {
          fail("operator name used as generator");
        }
        return QuandleWord::generator(std::move(n));
      }

      std::string const& _s;
      std::size_t        _i = 0;
    };
  }  // namespace detail

  inline QuandleWord parse_quandle_word(std::string const& s) {
    return detail::WordParser(s).parse();
  }

  struct QuandlePresentation {
    std::vector<std::string>                         generators;
    std::vector<std::pair<QuandleWord, QuandleWord>> relations;

    std::size_t index_of(std::string const& name) const {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == name) {
          return i;
        }
      }
      throw invalid_argument("unknown generator '" + name + "'");
    }

    // Throws unless names are distinct and every relation uses known names.
    void validate() const {
      std::set<std::string> seen;
      for (auto const& g : generators) {
        if (g.empty() || !detail::is_name_start(g[0])
            || !std::all_of(g.begin(), g.end(), detail::is_name_char) || g == "op" || g == "opinv") {
          throw invalid_argument("bad generator name '" + g + "'");
        }
        if (!seen.insert(g).second) {
          throw name_clash("generator '" + g + "' listed twice");
        }
      }
      for (auto const& [l, r] : relations) {
        check_names(l);
        check_names(r);
      }
    }

    bool operator==(QuandlePresentation const&) const = default;

   private:
    void check_names(QuandleWord const& w) const {
      if (w.kind == QuandleWord::Kind::generator) {
        index_of(w.name);
      } else {
        check_names(w.args[0]);
        check_names(w.args[1]);
      }
    }
  };

  // Relations x*y = (x*y) for every pair of elements of Q. Element names
  // are used when they are valid generator names, "e<i>" otherwise.
  inline QuandlePresentation quandle_presentation_of(FiniteQuandle const& Q) {
    QuandlePresentation P;
    std::set<std::string> seen;
    bool                  usable = Q.names().size() == Q.order();
    for (auto const& nm : Q.names()) {
      usable = usable && !nm.empty() && detail::is_name_start(nm[0])
            && std::all_of(nm.begin(), nm.end(), detail::is_name_char) && nm != "op" && nm != "opinv"
            && seen.insert(nm).second;
    }
    for (std::size_t x = 0; x < Q.order(); ++x) {
      P.generators.push_back(usable ? Q.name(x) : "e" + std::to_string(x));
    }
    auto g = [&](std::size_t x) { return QuandleWord::generator(P.generators[x]); };
    for (std::size_t x = 0; x < Q.order(); ++x) {
      for (std::size_t y = 0; y < Q.order(); ++y) {
        P.relations.emplace_back(QuandleWord::make(QuandleWord::Kind::op, g(x), g(y)), g(Q.op(x, y)));
      }
    }
    return P;
  }

  namespace detail {
    inline QuandleWord rename(QuandleWord w, std::map<std::string, std::string> const& m) {
      if (w.kind == QuandleWord::Kind::generator) {
        if (auto it = m.find(w.name); it != m.end()) {
          w.name = it->second;
        }
      } else {
        w.args[0] = rename(std::move(w.args[0]), m);
        w.args[1] = rename(std::move(w.args[1]), m);
      }
      return w;
    }
  }  // namespace detail

  // <X u Y | R u S>. Names of P2 that clash are renamed by appending
  // "_2", "_3", ... until free.
  inline QuandlePresentation presentation_free_product(QuandlePresentation const& P1,
                                                       QuandlePresentation const& P2) {
    P1.validate();
    P2.validate();
    QuandlePresentation                out = P1;
    std::set<std::string>              used(P1.generators.begin(), P1.generators.end());
    used.insert(P2.generators.begin(), P2.generators.end());
    std::map<std::string, std::string> renames;
    for (auto const& g : P2.generators) {
      std::string name = g;
      if (std::find(P1.generators.begin(), P1.generators.end(), g) != P1.generators.end()) {
        bool found = false;
        for (std::size_t k = 2; k < 1000 && !found; ++k) {
          name = g + "_" + std::to_string(k);
          found = !used.count(name);
        }
        if (!found) {
          throw name_clash("could not rename generator '" + g + "'");
        }
        used.insert(name);
        renames[g] = name;
      }
      out.generators.push_back(name);
    }
    for (auto const& [l, r] : P2.relations) {
      out.relations.emplace_back(detail::rename(l, renames), detail::rename(r, renames));
    }
    return out;
  }

  // alpha(a*b) = alpha(b)^{-1} alpha(a) alpha(b), alpha(a*^{-1}b) = alpha(b) alpha(a) alpha(b)^{-1}
  inline Word quandle_word_to_group_word(QuandlePresentation const& P, QuandleWord const& w) {
    if (w.kind == QuandleWord::Kind::generator) {
      return gen(P.index_of(w.name));
    }
    auto const a = quandle_word_to_group_word(P, w.args[0]);
    auto const b = quandle_word_to_group_word(P, w.args[1]);
    if (w.kind == QuandleWord::Kind::op) {
      return word_concat(word_concat(word_inverse(b), a), b);
    }
    return word_concat(word_concat(b, a), word_inverse(b));
  }

  // One relator alpha(l) alpha(r)^{-1} per relation, kept even when empty
  // so relators stay in bijection with relations.
  inline GroupPresentation envelope_of(QuandlePresentation const& P) {
    P.validate();
    GroupPresentation G;
    G.num_generators = P.generators.size();
    G.names          = P.generators;
    for (auto const& [l, r] : P.relations) {
      G.relators.push_back(
          word_concat(quandle_word_to_group_word(P, l), word_inverse(quandle_word_to_group_word(P, r))));
    }
    return G;
  }

  // Generators of B follow those of A.
  inline GroupPresentation disjoint_union(GroupPresentation const& A, GroupPresentation const& B) {
    GroupPresentation out = A;
    out.num_generators += B.num_generators;
    out.names.insert(out.names.end(), B.names.begin(), B.names.end());
    for (auto r : B.relators) {
      for (auto& l : r) {
        l.generator += A.num_generators;
      }
      out.relators.push_back(std::move(r));
    }
    return out;
  }

  // Equal generator counts and relator lists; names are ignored.
  inline bool same_structure(GroupPresentation const& A, GroupPresentation const& B) {
    return A.num_generators == B.num_generators && A.relators == B.relators;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded closure of a presentation
  ////////////////////////////////////////////////////////////////////////

  // The value of a quandle word in the free rack; left-normed words
  // x *^{e1} y1 ... *^{ek} yk become (x, y1^{e1} ... yk^{ek}).
  inline FreeRackElement fr_value(QuandlePresentation const& P, QuandleWord const& w) {
    if (w.kind == QuandleWord::Kind::generator) {
      return {P.index_of(w.name), {}};
    }
    auto const a = fr_value(P, w.args[0]);
    auto const b = fr_value(P, w.args[1]);
    return w.kind == QuandleWord::Kind::op ? fr_op(a, b) : fr_op_inv(a, b);
  }

  struct ClosureEstimate {
    std::size_t depth          = 0;
    std::size_t words          = 0;  // canonical left-normed words of length <= depth
    std::size_t lower_bound    = 0;  // distinct values under the models found
    std::size_t upper_bound    = 0;  // classes after bounded rewriting
    std::size_t models_used    = 0;
    bool        free_model     = false;  // every relation holds in the free quandle
    std::vector<std::vector<std::size_t>> classes;  // word indices, upper-bound partition

    bool exact() const noexcept {
      return lower_bound == upper_bound;
    }
  };

  inline constexpr std::size_t max_closure_depth = 4;

  namespace detail {
    inline std::string word_key(FreeQuandleElement const& e) {
      std::string k = std::to_string(e.base) + ":";
      for (auto const& l : e.word) {
        k += std::to_string(l.generator) + (l.exponent > 0 ? "+" : "-");
      }
      return k;
    }

    // All finite quandles of order <= 3, as models for the lower bound.
    inline std::vector<FiniteQuandle> small_models() {
      std::vector<FiniteQuandle> out;
      for (std::size_t n = 1; n <= 3; ++n) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n * n; ++i) {
          total *= n;
        }
        for (std::size_t code = 0; code < total; ++code) {
          Table       t(n, std::vector<std::size_t>(n));
          std::size_t c = code;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              t[i][j] = c % n;
              c /= n;
            }
          }
          if (!check_axioms(t)) {
            out.push_back(FiniteQuandle::from_table(t));
          }
        }
      }
      return out;
    }

    inline std::size_t eval_in(FiniteQuandle const& M, std::vector<std::size_t> const& f, FreeRackElement const& e) {
      std::size_t v = f[e.base];
      for (auto const& l : e.word) {
        v = l.exponent > 0 ? M.op(v, f[l.generator]) : M.op_inv(v, f[l.generator]);
      }
      return v;
    }

    inline std::size_t eval_in(FiniteQuandle const& M, std::vector<std::size_t> const& f, QuandlePresentation const& P,
                               QuandleWord const& w) {
      if (w.kind == QuandleWord::Kind::generator) {
        return f[P.index_of(w.name)];
      }
      auto const a = eval_in(M, f, P, w.args[0]);
      auto const b = eval_in(M, f, P, w.args[1]);
      return w.kind == QuandleWord::Kind::op ? M.op(a, b) : M.op_inv(a, b);
    }
  }  // namespace detail

  // Estimates how many distinct elements of <X | R> the left-normed words of
  // length <= depth represent. Words are kept in free-quandle canonical form
  // (which applies x*x = x and x*y*^{-1}y = x), and a union-find over words
  // of length <= depth + 2 merges by the relations, right multiplication by
  // generators, and left multiplication by merged pairs. Every merge is a
  // true equality, so the class count is an upper bound; values under
  // finite models satisfying R (and the free quandle when R holds there)
  // separate words, giving a lower bound.
  inline ClosureEstimate bounded_closure(QuandlePresentation const& P, std::size_t depth) {
    if (depth > max_closure_depth) {
      throw depth_exceeded("closure depth must be <= " + std::to_string(max_closure_depth));
    }
    P.validate();
    std::size_t const n     = P.generators.size();
    std::size_t const limit = depth + 2;
    ClosureEstimate   est;
    est.depth = depth;

    std::vector<FreeQuandleElement>              nodes = free_quandle_elements(n, limit);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      index.emplace(detail::word_key(nodes[i]), i);
    }
    auto find_node = [&](FreeRackElement const& e) -> std::optional<std::size_t> {
      auto c = fq_canonicalize(e);
      if (c.word.size() > limit) {
        return std::nullopt;
      }
      return index.at(detail::word_key(c));
    };

    detail::UnionFind uf(nodes.size());
    bool              changed = false;
    auto merge = [&](std::optional<std::size_t> a, std::optional<std::size_t> b) {
      if (a && b && uf.find(*a) != uf.find(*b)) {
        uf.unite(*a, *b);
        changed = true;
      }
    };

    std::vector<std::pair<FreeRackElement, FreeRackElement>> rel;
    for (auto const& [l, r] : P.relations) {
      rel.emplace_back(fr_value(P, l), fr_value(P, r));
    }
    // short words act by left multiplication without exceeding the bound
    std::size_t const act_len = limit >= 1 ? (limit - 1) / 2 : 0;

    // A node's merge consequences are applied once, against the root it has
    // when first merged; later root changes are covered by the root's own
    // turn, by transitivity.
    std::vector<char> done(nodes.size(), 0);
    for (auto const& [l, r] : rel) {
      merge(find_node(l), find_node(r));
    }
    do {
      changed = false;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::size_t const root = uf.find(i);
        if (root == i || done[i]) {
          continue;
        }
        done[i] = 1;
        for (std::size_t g = 0; g < n; ++g) {
          FreeRackElement const y{g, {}};
          merge(find_node(fr_op(nodes[i], y)), find_node(fr_op(nodes[root], y)));
          merge(find_node(fr_op_inv(nodes[i], y)), find_node(fr_op_inv(nodes[root], y)));
        }
        if (nodes[i].word.size() <= act_len && nodes[root].word.size() <= act_len) {
          for (std::size_t z = 0; z < nodes.size(); ++z) {
            merge(find_node(fr_op(nodes[z], nodes[i])), find_node(fr_op(nodes[z], nodes[root])));
            merge(find_node(fr_op_inv(nodes[z], nodes[i])), find_node(fr_op_inv(nodes[z], nodes[root])));
          }
        }
      }
    } while (changed);

    std::vector<std::size_t> shown;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].word.size() <= depth) {
        shown.push_back(i);
      }
    }
    est.words = shown.size();
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t k = 0; k < shown.size(); ++k) {
      by_root[uf.find(shown[k])].push_back(k);
    }
    for (auto& [root, members] : by_root) {
      est.classes.push_back(std::move(members));
    }
    std::sort(est.classes.begin(), est.classes.end());
    est.upper_bound = est.classes.size();

    // lower bound: signatures under models
    std::vector<std::vector<std::size_t>> sig(shown.size());
    est.free_model = std::all_of(rel.begin(), rel.end(), [](auto const& lr) { return fq_equal(lr.first, lr.second); });
    if (est.free_model) {
      std::map<FreeQuandleElement, std::size_t> ids;
      for (std::size_t k = 0; k < shown.size(); ++k) {
        auto c = fq_canonicalize(nodes[shown[k]]);
        sig[k].push_back(ids.emplace(c, ids.size()).first->second);
      }
      ++est.models_used;
    }
    if (n > 0 && n <= 4) {
      for (auto const& M : detail::small_models()) {
        std::size_t const        m = M.order();
        std::vector<std::size_t> f(n, 0);
        for (;;) {
          bool ok = true;
          for (auto const& [l, r] : P.relations) {
            if (detail::eval_in(M, f, P, l) != detail::eval_in(M, f, P, r)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            ++est.models_used;
            for (std::size_t k = 0; k < shown.size(); ++k) {
              sig[k].push_back(detail::eval_in(M, f, nodes[shown[k]]));
            }
          }
          std::size_t pos = 0;
          while (pos < n && ++f[pos] == m) {
            f[pos++] = 0;
          }
          if (pos == n) {
            break;
          }
        }
      }
    }
    std::set<std::vector<std::size_t>> distinct(sig.begin(), sig.end());
    est.lower_bound = shown.empty() ? 0 : distinct.size();
    return est;
  }

}  // namespace qf
