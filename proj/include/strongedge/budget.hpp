#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace strongedge {

// Search limits. Zero / empty means unlimited.
struct Budget {
  std::optional<std::chrono::duration<double>> time;
  std::uint64_t node_limit = 0;

  static Budget seconds(double s) { return Budget{std::chrono::duration<double>(s), 0}; }
  static Budget nodes(std::uint64_t n) { return Budget{std::nullopt, n}; }
};

// Tracks one search against a Budget.
class BudgetClock {
 public:
  explicit BudgetClock(const Budget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; true once the budget is spent.
  bool tick() {
    ++nodes_;
    if (budget_.node_limit && nodes_ > budget_.node_limit) return exhausted_ = true;
    if (budget_.time && (nodes_ & 1023) == 0 && elapsed() > budget_.time->count()) return exhausted_ = true;
    return exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace strongedge
