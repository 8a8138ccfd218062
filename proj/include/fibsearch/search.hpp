#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibsearch/types.hpp"
#include "fibsearch/weights.hpp"

namespace fibsearch {

/// short_form follows the complete budget-k tree with the rightmost children
/// clamped; full_form follows the pruned tree and is also average-case
/// optimal for equiprobable targets.
enum class SearchMode { short_form, full_form };

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

/// One comparison: the interval [left, right] is split into h consecutive
/// intervals. boundaries[i] is the last index of interval i, so interval i is
/// (boundaries[i-1], boundaries[i]] with boundaries[-1] = left - 1 and
/// boundaries[h-1] = right. Equal consecutive boundaries denote an empty
/// interval. For two outcomes this is the comparison x <= v[boundaries[0]].
struct ProbeRequest {
  std::int64_t left = 0;
  std::int64_t right = 0;
  std::vector<std::int64_t> boundaries;

  std::size_t interval_count() const noexcept { return boundaries.size() + 1; }
  std::int64_t first_of(std::size_t i) const {
    return i == 0 ? left : boundaries[i - 1] + 1;
  }
  std::int64_t last_of(std::size_t i) const {
    return i == boundaries.size() ? right : boundaries[i];
  }
  bool is_empty(std::size_t i) const { return last_of(i) < first_of(i); }
};

struct ProbeOutcome {
  std::size_t outcome_index = 0;
  Level charged_cost = 0;
};

struct TraceStep {
  ProbeRequest request;
  ProbeOutcome outcome;
};

struct SearchTrace {
  std::vector<TraceStep> steps;
  Level total_cost = 0;
  Rational scaled_cost{0};
  std::uint64_t result_index = 0;
  // Remaining budget when each probe was issued, then the final one.
  std::vector<Level> z_history;
};

/// The probe contract: given a request, name the interval holding the hidden
/// target. Must be deterministic within one search and is called
/// sequentially.
using Probe = std::function<std::size_t(const ProbeRequest&)>;

class InconsistentProbe : public std::runtime_error {
 public:
  InconsistentProbe(const std::string& what, SearchTrace partial)
      : std::runtime_error(what), trace_(std::move(partial)) {}
  const SearchTrace& trace() const noexcept { return trace_; }

 private:
  SearchTrace trace_;
};

/// Step 0 of the search: the sequence values the descent needs for one
/// (weights, n, mode). O(k h) words with k the minimal worst-case cost, so
/// logarithmic in n. Immutable once built and shareable between searches.
class SearchPlan {
 public:
  SearchPlan(WeightVector weights, std::uint64_t n, SearchMode mode);

  const WeightVector& weights() const noexcept { return weights_; }
  std::uint64_t n() const noexcept { return n_; }
  SearchMode mode() const noexcept { return mode_; }
  // Least k with G(k) >= n: the optimal worst-case cost.
  Level budget() const noexcept { return k_; }

  /// Position in the implicit decision tree.
  class Cursor {
   public:
    std::int64_t left() const noexcept { return left_; }
    std::int64_t right() const noexcept {
      return left_ + static_cast<std::int64_t>(size_) - 1;
    }
    std::uint64_t size() const noexcept { return size_; }
    Level remaining() const noexcept { return remaining_; }
    bool at_leaf() const noexcept { return size_ == 1; }

    // Items per outcome below this node; zero marks an empty interval.
    const std::vector<std::uint64_t>& split();
    void descend(std::size_t outcome);

   private:
    friend class SearchPlan;
    struct Child {
      std::uint64_t size = 0;
      std::uint64_t plain = 0;
      std::uint64_t conversions = 0;
    };

    void compute_short_split();
    void compute_full_split();

    const SearchPlan* plan_ = nullptr;
    std::int64_t left_ = 0;
    std::uint64_t size_ = 0;
    Level remaining_ = 0;
    // Leaves this subtree gains over the budget-(k-1) tree, by kind.
    std::uint64_t plain_ = 0;
    std::uint64_t conversions_ = 0;
    bool split_ready_ = false;
    std::vector<Child> children_;
    std::vector<std::uint64_t> sizes_;
  };

  Cursor root() const;

  // Table accessors, exposed for tests of the budget invariant.
  std::uint64_t G(Level b) const;
  std::uint64_t plain_sites(Level b) const;
  std::uint64_t conversion_sites(Level b) const;
  std::uint64_t conversion_size() const noexcept { return conversion_size_; }

 private:
  WeightVector weights_;
  std::uint64_t n_;
  SearchMode mode_;
  Level k_ = 0;
  Level second_weight_ = 0;
  std::uint64_t conversion_size_ = 0;
  std::vector<std::uint64_t> G_;
  std::vector<std::uint64_t> plain_;
  std::vector<std::uint64_t> conversion_;
};

/// Locates the hidden target with cost-aware comparisons. The trace records
/// every issued probe; nodes with a single nonempty child are descended
/// without a probe. scaled_cost = total_cost * weight scale * unit_cost.
SearchTrace fib_search(const SearchPlan& plan, const Probe& probe,
                       const Rational& unit_cost = Rational{1});

SearchTrace fib_search(std::uint64_t n, const WeightVector& weights,
                       const Probe& probe, SearchMode mode,
                       const Rational& unit_cost = Rational{1});

/// Probe that answers for a known target index.
Probe target_probe(std::uint64_t target);

/// Exhaustive over all n targets: maximum and sum of total_cost.
Level worst_case_cost(std::uint64_t n, const WeightVector& weights,
                      SearchMode mode);
Level total_cost_sum(std::uint64_t n, const WeightVector& weights,
                     SearchMode mode);

}  // namespace fibsearch
