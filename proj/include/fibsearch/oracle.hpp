#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fibsearch/types.hpp"
#include "fibsearch/weights.hpp"

// Ground truth by exhaustive dynamic programming over interval splits. This
// file deliberately shares nothing with the sequence tables or the search
// code it is used to check.

namespace fibsearch {

/// A valid decision tree splits every interval of two or more items into h
/// consecutive parts, at least two of them nonempty; empty parts are allowed
/// and simply never answered. Costs depend only on interval length.

// Largest n accepted by dp_worst and cost_matrix for the given arity.
std::uint64_t dp_worst_limit(std::size_t arity);
inline constexpr std::uint64_t kDpExpectedLimit = 60;

/// Least achievable worst-case cost for n equiprobable items.
Level dp_worst(std::uint64_t n, const WeightVector& weights);

/// dp_worst for every length 1..n (index 0 unused, holds 0).
std::vector<Level> dp_worst_table(std::uint64_t n, const WeightVector& weights);

/// Least achievable sum of costs over all n targets, among trees whose every
/// leaf has level <= level_cap when a cap is given. Throws std::domain_error
/// if the cap is below dp_worst.
Level dp_expected(std::uint64_t n, const WeightVector& weights,
                  std::optional<Level> level_cap = std::nullopt);

struct CostMatrixEntry {
  std::uint64_t first = 0;  // interval [first, last]
  std::uint64_t last = 0;
  Level worst = 0;
  Level total = 0;
  // Worst-case optimal split, smallest tuple first; same convention as a
  // probe request (last index of each part but the final one). Empty for
  // single items.
  std::vector<std::int64_t> best_split;
};

/// Entries for all intervals 0 <= first <= last < n, row-major by first.
std::vector<CostMatrixEntry> cost_matrix(std::uint64_t n,
                                         const WeightVector& weights);

/// Plain midpoint binary search: probe floor((l+r)/2), "true" keeps [l, mid].
/// Returns the largest cost over all targets.
Rational midpoint_binary_cost(std::uint64_t n, const Rational& cost_true,
                              const Rational& cost_false);

/// Depth ceil(log2 n) complete binary tree cut down to its n leftmost leaves.
Rational packed_binary_cost(std::uint64_t n, const Rational& cost_true,
                            const Rational& cost_false);

}  // namespace fibsearch
