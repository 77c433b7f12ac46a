#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace isk4 {

/// Three-valued outcome of a budgeted search. A `budget` outcome is never a verdict.
enum class SearchStatus { found, none, budget };

const char* to_string(SearchStatus s);

struct SearchLimits {
  /// Maximum number of search nodes; 0 means unlimited.
  std::int64_t node_budget = 0;
};

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<T> value;

  static SearchResult found(T v) { return {SearchStatus::found, std::move(v)}; }
  static SearchResult none() { return {SearchStatus::none, std::nullopt}; }
  static SearchResult budget() { return {SearchStatus::budget, std::nullopt}; }

  bool is_found() const { return status == SearchStatus::found; }
  bool is_none() const { return status == SearchStatus::none; }
  bool is_budget() const { return status == SearchStatus::budget; }
};

/// Thrown by node counters to unwind a search; caught at the search boundary.
struct BudgetExhausted {};

class NodeCounter {
public:
  explicit NodeCounter(SearchLimits limits) : limit_(limits.node_budget) {}

  void tick() {
    if (limit_ > 0 && ++used_ > limit_) throw BudgetExhausted{};
  }
  std::int64_t used() const { return used_; }

private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
};

}  // namespace isk4
