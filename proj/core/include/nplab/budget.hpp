#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stop_token>

namespace nplab {

/// Limits for a backtracking search. Every field is optional; the default
/// budget is unlimited. `stop` lets a caller cancel a running search
/// cooperatively.
struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
  std::stop_token stop;

  static SearchBudget nodes(std::uint64_t limit) { return SearchBudget{limit, std::nullopt, {}}; }
};

enum class SearchStatus {
  Found,            ///< a witness was produced
  Exhausted,        ///< the whole space was searched: definitive negative
  BudgetExhausted,  ///< stopped early; nothing can be concluded
};

template <class T>
struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::Found; }
  bool exhausted() const noexcept { return status == SearchStatus::Exhausted; }
};

/// Tracks consumption of one SearchBudget. A meter may be shared by several
/// sub-searches so they draw on one pool.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Accounts for one search node; false once any limit is hit.
  bool tick() {
    if (tripped_) return false;
    ++nodes_;
    if (budget_.node_limit && nodes_ > *budget_.node_limit) {
      tripped_ = true;
    } else if ((nodes_ & 0x3ff) == 0) {
      if (budget_.stop.stop_requested()) {
        tripped_ = true;
      } else if (budget_.time_limit &&
                 std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
        tripped_ = true;
      }
    }
    return !tripped_;
  }

  bool tripped() const noexcept { return tripped_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool tripped_ = false;
};

}  // namespace nplab
