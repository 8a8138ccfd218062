#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fibsearch/types.hpp"

namespace fibsearch {

// Largest canonical weight accepted. Sequence tables are indexed by cost, so
// a huge weight ratio would make every table proportionally long.
inline constexpr Level kMaxCanonicalWeight = 1 << 20;

class InvalidWeights : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome costs of one comparison, in canonical form.
///
/// Outcome i of a probe is always charged weights()[i]; the order given by the
/// caller is kept. Canonical weights are coprime positive integers and
/// scale() maps them back to the caller's units: scale * weights()[i] equals
/// the i-th raw cost.
class WeightVector {
 public:
  /// Integer weights that are already canonical (gcd 1). Throws otherwise.
  WeightVector(std::initializer_list<Level> weights);
  explicit WeightVector(std::vector<Level> weights);

  std::span<const Level> weights() const noexcept { return weights_; }
  Level operator[](std::size_t i) const { return weights_[i]; }
  std::size_t arity() const noexcept { return weights_.size(); }
  Level min_weight() const noexcept { return ell_; }
  Level max_weight() const noexcept { return u_; }
  const Rational& scale() const noexcept { return scale_; }

  // Number of outcomes whose weight fits into a remaining budget.
  std::size_t fitting(Level budget) const noexcept;

  // "1,3" style rendering of the canonical weights.
  std::string to_string() const;

  bool operator==(const WeightVector&) const = default;

 private:
  friend WeightVector canonical_weights(std::span<const Rational> raw);
  WeightVector(std::vector<Level> weights, Rational scale);

  std::vector<Level> weights_;
  Level ell_ = 0;
  Level u_ = 0;
  Rational scale_{1};
};

// Clears denominators and divides out the common gcd, preserving order.
WeightVector canonical_weights(std::span<const Rational> raw);

// Parses an integer, a decimal ("0.25") or a fraction ("3/4").
Rational parse_rational(std::string_view text);

// Parses a comma separated list such as "1,3" or "0.5,3/2" into canonical
// weights. Diagnostics name the offending entry.
WeightVector parse_weights(std::string_view text);

}  // namespace fibsearch
