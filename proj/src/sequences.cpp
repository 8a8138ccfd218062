#include "fibsearch/sequences.hpp"

#include <stdexcept>
#include <string>

namespace fibsearch {

namespace {
const BigInt kZero{0};
}

FibTable::FibTable(WeightVector weights) : weights_(std::move(weights)) {
  extend_to(0);
}

void FibTable::extend_to(Level k) {
  const Level ell = weights_.min_weight();
  for (Level next = k_max() + 1; next <= k; ++next) {
    BigInt g = next == 0 ? BigInt(1) : BigInt(0);
    if (next > 0) {
      for (Level w : weights_.weights()) {
        if (next - w >= 0) g += g_[static_cast<std::size_t>(next - w)];
      }
    }
    g_.push_back(std::move(g));
    // G(next) = G(next-1) + g(next) - g(next-l)
    BigInt big = g_.back();
    if (next > 0) {
      big += G_.back();
      if (next - ell >= 0) big -= g_[static_cast<std::size_t>(next - ell)];
    }
    G_.push_back(std::move(big));
  }
}

BigInt FibTable::g(Level k) {
  if (k < 0) return kZero;
  extend_to(k);
  return g_[static_cast<std::size_t>(k)];
}

BigInt FibTable::G(Level k) {
  if (k < 0) return kZero;
  extend_to(k);
  return G_[static_cast<std::size_t>(k)];
}

const BigInt& FibTable::g_at(Level k) const {
  if (k < 0) return kZero;
  if (k > k_max()) {
    throw std::out_of_range("g(" + std::to_string(k) + ") not computed; k_max=" +
                            std::to_string(k_max()));
  }
  return g_[static_cast<std::size_t>(k)];
}

const BigInt& FibTable::G_at(Level k) const {
  if (k < 0) return kZero;
  if (k > k_max()) {
    throw std::out_of_range("G(" + std::to_string(k) + ") not computed; k_max=" +
                            std::to_string(k_max()));
  }
  return G_[static_cast<std::size_t>(k)];
}

MinLevel min_level_for(FibTable& table, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("min_level_for: n must be >= 1");
  // G is nondecreasing, so a linear scan from 0 finds the least index. The
  // scan is O(u log n) because G grows at least like 2^(k/u).
  Level k = 0;
  while (table.G(k) < n) ++k;
  return {k, table.G(k)};
}

}  // namespace fibsearch
