#pragma once

#include <stdexcept>
#include <string>

namespace orientalis::detail {

[[noreturn]] inline void check_failed(const char* expr, const std::string& msg) {
  throw std::logic_error(std::string("internal check failed: ") + expr +
                         (msg.empty() ? "" : " -- " + msg));
}

[[noreturn]] inline void precondition_failed(const std::string& msg) {
  throw std::invalid_argument(msg);
}

}  // namespace orientalis::detail

// Library bug trap: failure means the implementation (or one of the claims it
// relies on) is wrong, never that the caller passed bad input.
#define ORI_CHECK(expr, msg)                         \
  do {                                               \
    if (!(expr)) {                                   \
      ::orientalis::detail::check_failed(#expr, msg); \
    }                                                \
  } while (0)

#define ORI_REQUIRE(expr, msg)                          \
  do {                                                  \
    if (!(expr)) {                                      \
      ::orientalis::detail::precondition_failed(msg);   \
    }                                                   \
  } while (0)
