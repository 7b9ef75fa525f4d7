#pragma once

#include <cstdint>
#include <string>

#include "pivotminor/error.hpp"

namespace pivotminor {

/// Node counter shared by the exhaustive searches. A search that hits the
/// limit throws BudgetExhausted; it never reports absence in that case.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 50'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void tick(const char* where, std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw Error(ErrorCode::BudgetExhausted,
                  std::string(where) + " exceeded node budget " + std::to_string(limit_));
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace pivotminor
