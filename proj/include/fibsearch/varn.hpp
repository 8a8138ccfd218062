#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibsearch/search.hpp"
#include "fibsearch/types.hpp"
#include "fibsearch/weights.hpp"

namespace fibsearch {

/// Word j of an alphabetic prefix code over h letters, letter i costing w_i.
/// The letters are the outcomes of the full-form search for index j.
struct Codeword {
  std::vector<std::uint32_t> letters;
  Level cost = 0;

  bool operator==(const Codeword&) const = default;
};

class InvalidCodeword : public std::invalid_argument {
 public:
  InvalidCodeword(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  // Index into the letter sequence where decoding failed.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline constexpr std::uint64_t kCodeTableLimit = 100000;

Codeword encode(const SearchPlan& plan, std::uint64_t j);
Codeword encode(std::uint64_t n, const WeightVector& weights, std::uint64_t j);

std::uint64_t decode(const SearchPlan& plan,
                     std::span<const std::uint32_t> letters);
std::uint64_t decode(std::uint64_t n, const WeightVector& weights,
                     std::span<const std::uint32_t> letters);

/// All n codewords in word order. Throws LimitExceeded above kCodeTableLimit.
std::vector<Codeword> code_table(std::uint64_t n, const WeightVector& weights);

/// Letters as a digit string ("0110"); letters above 9 are written in
/// decimal and separated by dots.
std::string letters_to_string(std::span<const std::uint32_t> letters);

/// One "index<TAB>letters<TAB>cost" line per word.
std::string code_table_tsv(std::span<const Codeword> table);

}  // namespace fibsearch
