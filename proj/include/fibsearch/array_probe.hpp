#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "fibsearch/search.hpp"

namespace fibsearch {

class UnsortedInput : public std::invalid_argument {
 public:
  explicit UnsortedInput(std::size_t index)
      : std::invalid_argument("input not sorted at index " +
                              std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Throws UnsortedInput naming the first i with values[i] < values[i-1].
template <class T>
void verify_sorted(std::span<const T> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) throw UnsortedInput(i);
  }
}

/// Answers probes for key x over a sorted array: outcome i is the first
/// nonempty interval whose last value is >= x, or the last nonempty one.
template <class T>
class ArrayProbe {
 public:
  ArrayProbe(std::span<const T> values, T key)
      : values_(values), key_(std::move(key)) {}

  std::size_t operator()(const ProbeRequest& request) const {
    std::size_t last_nonempty = 0;
    for (std::size_t i = 0; i < request.interval_count(); ++i) {
      if (request.is_empty(i)) continue;
      last_nonempty = i;
      const auto last = static_cast<std::size_t>(request.last_of(i));
      if (!(values_[last] < key_)) return i;
    }
    return last_nonempty;
  }

 private:
  std::span<const T> values_;
  T key_;
};

struct ArraySearchResult {
  SearchTrace trace;
  bool found = false;
};

template <class T>
ArraySearchResult search_array(std::span<const T> values, const T& key,
                               const WeightVector& weights, SearchMode mode,
                               bool check_sorted = false,
                               const Rational& unit_cost = Rational{1}) {
  if (values.empty()) throw std::invalid_argument("cannot search an empty array");
  if (check_sorted) verify_sorted(values);
  ArraySearchResult result;
  result.trace = fib_search(values.size(), weights,
                            ArrayProbe<T>(values, key), mode, unit_cost);
  result.found = values[result.trace.result_index] == key;
  return result;
}

}  // namespace fibsearch
