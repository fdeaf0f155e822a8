#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "pq/errors.hpp"

namespace pq {

struct BudgetLimits {
  std::uint64_t max_subsets = 10'000'000;  // subsets visited by subfamily enumerations
  std::uint64_t max_work = 200'000'000;    // other search nodes (set cover, net verifier)
  unsigned repair_cap = 2000;              // weak-net repair iterations
  unsigned threads = 1;
};

/// Work accounting for one top-level call. Thread-safe.
class Budget {
 public:
  explicit Budget(BudgetLimits limits = {}) : limits_(limits) {}
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  const BudgetLimits& limits() const { return limits_; }
  std::uint64_t subsets_used() const { return subsets_.load(std::memory_order_relaxed); }
  std::uint64_t work_used() const { return work_.load(std::memory_order_relaxed); }

  void charge_subsets(std::uint64_t n, const char* what = "subset enumeration") {
    charge(subsets_, limits_.max_subsets, n, what);
  }
  void charge_work(std::uint64_t n, const char* what = "search") {
    charge(work_, limits_.max_work, n, what);
  }

 private:
  static void charge(std::atomic<std::uint64_t>& counter, std::uint64_t cap, std::uint64_t n,
                     const char* what) {
    const auto now = counter.fetch_add(n, std::memory_order_relaxed) + n;
    if (now > cap) {
      throw BudgetExceeded(std::string(what) + " exceeded budget of " + std::to_string(cap));
    }
  }

  BudgetLimits limits_;
  std::atomic<std::uint64_t> subsets_{0};
  std::atomic<std::uint64_t> work_{0};
};

}  // namespace pq
