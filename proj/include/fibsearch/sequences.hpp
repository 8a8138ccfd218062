#pragma once

#include <cstdint>
#include <vector>

#include "fibsearch/types.hpp"
#include "fibsearch/weights.hpp"

namespace fibsearch {

/// Memoized generalized Fibonacci numbers for one weight vector.
///
///   g(k) = 0 for k < 0, g(0) = 1, g(k) = sum_i g(k - w_i) for k >= 1
///   G(k) = g(k) + g(k-1) + ... + g(k-l+1),  l = min weight
///
/// g(k) counts the nodes at level k of the unbounded lopsided tree; G(k) is
/// the largest number of leaves of any decision tree whose level is at most k,
/// so the least k with G(k) >= n bounds the worst-case search cost from below.
///
/// Values are exact. The table only grows; lookups with negative k return 0
/// without touching storage. Extension is single-writer, const lookups of
/// already computed entries are safe from any number of readers.
class FibTable {
 public:
  explicit FibTable(WeightVector weights);

  const WeightVector& weights() const noexcept { return weights_; }
  Level k_max() const noexcept { return static_cast<Level>(g_.size()) - 1; }

  void extend_to(Level k);

  BigInt g(Level k);
  BigInt G(Level k);

  // Lookups that never extend; k must be <= k_max().
  const BigInt& g_at(Level k) const;
  const BigInt& G_at(Level k) const;

 private:
  WeightVector weights_;
  std::vector<BigInt> g_;
  std::vector<BigInt> G_;
};

struct MinLevel {
  Level k = 0;
  BigInt capacity;
};

/// Smallest k >= 0 with G(k) >= n, and G(k). Grows the table as needed.
MinLevel min_level_for(FibTable& table, const BigInt& n);

}  // namespace fibsearch
