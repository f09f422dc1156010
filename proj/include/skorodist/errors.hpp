#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace skorodist {

/// Malformed input: bad files, violated preconditions, inconsistent data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured cap. Never silently approximated.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration caps. `SKORODIST_BUDGET` overrides the tuple cap.
struct Budget {
  std::size_t max_tuples = 200000;
  std::size_t max_bruteforce_points = 6;

  static Budget from_env() {
    Budget b;
    if (const char* env = std::getenv("SKORODIST_BUDGET")) {
      try {
        const long long v = std::stoll(env);
        if (v > 0) b.max_tuples = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw InputError(std::string("SKORODIST_BUDGET is not an integer: ") + env);
      }
    }
    return b;
  }
};

}  // namespace skorodist
