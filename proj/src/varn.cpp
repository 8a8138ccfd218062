#include "fibsearch/varn.hpp"

#include <sstream>

namespace fibsearch {

Codeword encode(const SearchPlan& plan, std::uint64_t j) {
  if (j >= plan.n()) {
    throw std::out_of_range("word index " + std::to_string(j) +
                            " outside [0, " + std::to_string(plan.n()) + ")");
  }
  const SearchTrace trace = fib_search(plan, target_probe(j));
  Codeword word;
  word.letters.reserve(trace.steps.size());
  for (const TraceStep& step : trace.steps) {
    word.letters.push_back(static_cast<std::uint32_t>(step.outcome.outcome_index));
  }
  word.cost = trace.total_cost;
  return word;
}

Codeword encode(std::uint64_t n, const WeightVector& weights, std::uint64_t j) {
  return encode(SearchPlan(weights, n, SearchMode::full_form), j);
}

std::uint64_t decode(const SearchPlan& plan,
                     std::span<const std::uint32_t> letters) {
  SearchPlan::Cursor cursor = plan.root();
  std::size_t pos = 0;
  while (!cursor.at_leaf()) {
    const std::vector<std::uint64_t>& sizes = cursor.split();
    std::size_t nonempty = 0;
    std::size_t only = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (sizes[i] > 0) {
        ++nonempty;
        only = i;
      }
    }
    if (nonempty == 1) {
      cursor.descend(only);
      continue;
    }
    if (pos == letters.size()) {
      throw InvalidCodeword("truncated codeword: proper prefix ends at position " +
                                std::to_string(pos),
                            pos);
    }
    const std::uint32_t letter = letters[pos];
    if (letter >= sizes.size() || sizes[letter] == 0) {
      throw InvalidCodeword("letter " + std::to_string(letter) +
                                " at position " + std::to_string(pos) +
                                " leaves the code tree",
                            pos);
    }
    cursor.descend(letter);
    ++pos;
  }
  if (pos != letters.size()) {
    throw InvalidCodeword("extra letters after a complete codeword at position " +
                              std::to_string(pos),
                          pos);
  }
  return static_cast<std::uint64_t>(cursor.left());
}

std::uint64_t decode(std::uint64_t n, const WeightVector& weights,
                     std::span<const std::uint32_t> letters) {
  return decode(SearchPlan(weights, n, SearchMode::full_form), letters);
}

std::vector<Codeword> code_table(std::uint64_t n, const WeightVector& weights) {
  if (n > kCodeTableLimit) {
    throw LimitExceeded("code table is limited to n <= " +
                            std::to_string(kCodeTableLimit),
                        kCodeTableLimit);
  }
  const SearchPlan plan(weights, n, SearchMode::full_form);
  std::vector<Codeword> table;
  table.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) table.push_back(encode(plan, j));
  return table;
}

std::string letters_to_string(std::span<const std::uint32_t> letters) {
  bool wide = false;
  for (std::uint32_t l : letters) wide = wide || l > 9;
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (wide && i > 0) out += '.';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::string code_table_tsv(std::span<const Codeword> table) {
  std::ostringstream out;
  for (std::size_t j = 0; j < table.size(); ++j) {
    out << j << '\t' << letters_to_string(table[j].letters) << '\t'
        << table[j].cost << '\n';
  }
  return out.str();
}

}  // namespace fibsearch
