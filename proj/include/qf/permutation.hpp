#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace qf {

  // A bijection of {0..n-1}. Composition is left to right:
  // (p * q)(i) = q(p(i)), matching the right action y -> y*x of quandles.
  class Permutation {
   public:
    Permutation() = default;

    explicit Permutation(std::vector<std::size_t> images) : _images(std::move(images)) {
      std::vector<char> seen(_images.size(), 0);
      for (auto v : _images) {
        if (v >= _images.size() || seen[v]) {
          throw invalid_argument("not a permutation");
        }
        seen[v] = 1;
      }
    }

    static Permutation identity(std::size_t n) {
      std::vector<std::size_t> v(n);
      std::iota(v.begin(), v.end(), 0);
      Permutation p;
      p._images = std::move(v);
      return p;
    }

    // n-cycle 0 -> 1 -> ... -> n-1 -> 0
    static Permutation cycle(std::size_t n) {
      std::vector<std::size_t> v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = (i + 1) % n;
      }
      Permutation p;
      p._images = std::move(v);
      return p;
    }

    std::size_t size() const noexcept {
      return _images.size();
    }

    std::size_t operator()(std::size_t i) const noexcept {
      return _images[i];
    }

    std::size_t operator[](std::size_t i) const noexcept {
      return _images[i];
    }

    std::vector<std::size_t> const& images() const noexcept {
      return _images;
    }

    Permutation operator*(Permutation const& q) const {
      Permutation r;
      r._images.resize(_images.size());
      for (std::size_t i = 0; i < _images.size(); ++i) {
        r._images[i] = q._images[_images[i]];
      }
      return r;
    }

    Permutation inverse() const {
      Permutation r;
      r._images.resize(_images.size());
      for (std::size_t i = 0; i < _images.size(); ++i) {
        r._images[_images[i]] = i;
      }
      return r;
    }

    bool is_identity() const noexcept {
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i] != i) {
          return false;
        }
      }
      return true;
    }

    std::size_t fixed_points() const noexcept {
      std::size_t k = 0;
      for (std::size_t i = 0; i < _images.size(); ++i) {
        k += _images[i] == i;
      }
      return k;
    }

    // Sorted cycle lengths, fixed points included as 1's.
    std::vector<std::size_t> cycle_type() const {
      std::vector<std::size_t> out;
      std::vector<char>        seen(_images.size(), 0);
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = _images[j]) {
          seen[j] = 1;
          ++len;
        }
        out.push_back(len);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    bool operator==(Permutation const&) const = default;
    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<std::size_t> _images;
  };

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto v : p.images()) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

}  // namespace qf
