#pragma once

// Words in a free group on generators 0..n-1.

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"

namespace qf {

  struct Letter {
    std::size_t generator;
    int         exponent;  // +1 or -1

    bool operator==(Letter const&) const = default;
    auto operator<=>(Letter const&) const = default;

    Letter inverse() const noexcept {
      return {generator, -exponent};
    }
  };

  using Word = std::vector<Letter>;

  inline Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto const& l : w) {
      if (l.exponent != 1 && l.exponent != -1) {
        throw invalid_argument("letter exponent must be +1 or -1");
      }
      if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  inline Word word_inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) {
      l.exponent = -l.exponent;
    }
    return out;
  }

  inline Word word_concat(Word const& a, Word const& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
  }

  inline Word gen(std::size_t g, int e = 1) {
    return Word{Letter{g, e}};
  }

  // a^{-1} b^{-1} a b
  inline Word word_commutator(Word const& a, Word const& b) {
    return word_concat(word_concat(word_inverse(a), word_inverse(b)), word_concat(a, b));
  }

  inline Word word_power(Word const& w, long long k) {
    Word base = k < 0 ? word_inverse(w) : w;
    Word out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return free_reduce(out);
  }

  // Exponent sum of each generator.
  inline std::vector<long long> exponent_sums(Word const& w, std::size_t num_generators) {
    std::vector<long long> v(num_generators, 0);
    for (auto const& l : w) {
      v.at(l.generator) += l.exponent;
    }
    return v;
  }

  inline std::string word_to_string(Word const& w, std::vector<std::string> const& names = {}) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& l : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += l.generator < names.size() ? names[l.generator] : "g" + std::to_string(l.generator);
      if (l.exponent < 0) {
        s += "^-1";
      }
    }
    return s;
  }

}  // namespace qf
