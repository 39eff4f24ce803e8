#pragma once

// Seeded random inputs shared by the unit tests and the acceptance run.

#include <algorithm>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "qf/freealg.hpp"

namespace testgen {

  inline qf::FreeRackElement random_element(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
    qf::FreeRackElement p{rng() % gens, {}};
    std::size_t const   len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      p.word.push_back({rng() % gens, rng() % 2 ? 1 : -1});
    }
    p.word = qf::free_reduce(p.word);
    return p;
  }

  // 1..3 generators drawn from a small name pool, 0..2 relations between
  // random words of depth <= 2.
  inline qf::QuandlePresentation random_presentation(std::mt19937& rng) {
    static char const* const pool[] = {"a", "b", "c", "x", "y"};
    qf::QuandlePresentation  P;
    std::size_t const        n = 1 + rng() % 3;
    std::vector<std::string> names(std::begin(pool), std::end(pool));
    std::shuffle(names.begin(), names.end(), rng);
    P.generators.assign(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n));
    auto word = [&](auto&& self, int depth) -> qf::QuandleWord {
      if (depth == 0 || rng() % 3 == 0) {
        return qf::QuandleWord::generator(P.generators[rng() % n]);
      }
      auto k = rng() % 2 ? qf::QuandleWord::Kind::op : qf::QuandleWord::Kind::op_inv;
      return qf::QuandleWord::make(k, self(self, depth - 1), self(self, depth - 1));
    };
    std::size_t const r = rng() % 3;
    for (std::size_t i = 0; i < r; ++i) {
      P.relations.emplace_back(word(word, 2), word(word, 2));
    }
    return P;
  }

}  // namespace testgen
