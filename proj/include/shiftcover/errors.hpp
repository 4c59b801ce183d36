#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shiftcover {

// Base class of every error the library throws on bad input or exhausted
// resources. Logic bugs inside the library itself surface as assertions,
// never as Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text does not conform to one of the file formats.
struct ParseError : Error {
  using Error::Error;
};

// A configured size bound was exceeded (group order bound, word growth).
struct LimitError : Error {
  using Error::Error;
};

// The enumeration work budget ran out.
struct BudgetError : Error {
  using Error::Error;
};

// A word references generators its presentation does not have.
struct WordError : Error {
  using Error::Error;
};

// Structurally well-formed input that is mathematically inconsistent:
// an in_map image violating a domain relator, a failed divisibility check,
// a negative entry where a nonnegative matrix is required.
struct ConsistencyError : Error {
  using Error::Error;
};

// Matrix shapes or basis labels do not line up.
struct ShapeError : Error {
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;
inline constexpr int kDefaultGroupOrderBound = 10'000;
inline constexpr std::size_t kDefaultWordLengthBound = 1'000'000;

// Meters enumeration work in relator-letter evaluations (plus one unit per
// search node). Shared across every enumeration a single operation performs,
// so one call cannot exceed the bound by splitting work across hom sets.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit = kDefaultWorkBudget) : limit_(limit) {}

  void charge(std::uint64_t amount) {
    used_ += amount;
    if (used_ > limit_)
      throw BudgetError("work budget of " + std::to_string(limit_) +
                        " relator-letter evaluations exceeded");
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace shiftcover
