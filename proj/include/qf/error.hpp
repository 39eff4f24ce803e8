#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qf {

  // Base of every error thrown by the library.
  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Caller supplied something malformed (bad table shape, bad spec string).
  class invalid_argument : public error {
   public:
    using error::error;
  };

  // A size, closure, search, or budget limit was hit. The CLI maps every
  // subclass to exit code 3.
  class limit_exceeded : public error {
   public:
    using error::error;
  };

  class size_overflow : public limit_exceeded {
   public:
    using limit_exceeded::limit_exceeded;
  };

  class closure_limit_exceeded : public limit_exceeded {
   public:
    using limit_exceeded::limit_exceeded;
  };

  class search_limit_exceeded : public limit_exceeded {
   public:
    using limit_exceeded::limit_exceeded;
  };

  class order_limit_exceeded : public limit_exceeded {
   public:
    using limit_exceeded::limit_exceeded;
  };

  class budget_exhausted : public limit_exceeded {
   public:
    using limit_exceeded::limit_exceeded;
  };

  class depth_exceeded : public limit_exceeded {
   public:
    using limit_exceeded::limit_exceeded;
  };

  class not_abelian : public invalid_argument {
   public:
    using invalid_argument::invalid_argument;
  };

  class duplicate_base_element : public invalid_argument {
   public:
    using invalid_argument::invalid_argument;
  };

  class identity_base_element : public invalid_argument {
   public:
    using invalid_argument::invalid_argument;
  };

  class not_a_subquandle : public invalid_argument {
   public:
    using invalid_argument::invalid_argument;
  };

  class name_clash : public invalid_argument {
   public:
    using invalid_argument::invalid_argument;
  };

  // Default node budget for backtracking searches. QF_SEARCH_BUDGET
  // overrides it when set to a positive integer.
  inline std::size_t default_search_budget() {
    constexpr std::size_t fallback = 50'000'000;
    if (char const* env = std::getenv("QF_SEARCH_BUDGET")) {
      try {
        auto v = std::stoull(env);
        if (v > 0) {
          return static_cast<std::size_t>(v);
        }
      } catch (std::exception const&) {
      }
    }
    return fallback;
  }

}  // namespace qf
