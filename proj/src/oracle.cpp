#include "fibsearch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace fibsearch {

namespace {

constexpr Level kInf = std::numeric_limits<Level>::max();

enum class Combine { max, sum };

Level combine(Combine mode, Level a, Level b) {
  if (a == kInf || b == kInf) return kInf;
  return mode == Combine::max ? std::max(a, b) : a + b;
}

// Best way to hand m items to h ordered children, at least two nonempty.
// at(i, r, need) is the optimum for r items over children i..h-1 when at
// least `need` (capped at 2) of them must be nonempty.
class SplitSearch {
 public:
  using ChildValue = std::function<Level(std::size_t, std::uint64_t)>;

  SplitSearch(std::size_t h, std::uint64_t m, Combine mode, ChildValue value)
      : h_(h), m_(m), mode_(mode), value_(std::move(value)),
        table_((h + 1) * (m + 1) * 3, kInf) {
    at(h_, 0, 0) = 0;
    for (std::size_t i = h_; i-- > 0;) {
      for (std::uint64_t r = 0; r <= m_; ++r) {
        for (int need = 0; need < 3; ++need) {
          Level best = kInf;
          const std::uint64_t top = std::min(r, m_ - 1);
          for (std::uint64_t c = 0; c <= top; ++c) {
            best = std::min(best, option(i, r, need, c));
          }
          at(i, r, need) = best;
        }
      }
    }
  }

  Level best() const { return at(0, m_, 2); }

  // Lexicographically smallest optimal part sizes.
  std::vector<std::uint64_t> composition() const {
    std::vector<std::uint64_t> parts(h_, 0);
    std::uint64_t r = m_;
    int need = 2;
    for (std::size_t i = 0; i + 1 < h_; ++i) {
      const Level target = at(i, r, need);
      for (std::uint64_t c = 0; c <= std::min(r, m_ - 1); ++c) {
        if (option(i, r, need, c) == target) {
          parts[i] = c;
          break;
        }
      }
      r -= parts[i];
      if (parts[i] > 0) need = std::max(need - 1, 0);
    }
    parts[h_ - 1] = r;
    return parts;
  }

 private:
  Level option(std::size_t i, std::uint64_t r, int need, std::uint64_t c) const {
    if (c == 0) return at(i + 1, r, need);
    const Level rest = at(i + 1, r - c, std::max(need - 1, 0));
    if (rest == kInf) return kInf;
    return combine(mode_, value_(i, c), rest);
  }

  Level& at(std::size_t i, std::uint64_t r, int need) {
    return table_[(i * (m_ + 1) + r) * 3 + static_cast<std::size_t>(need)];
  }
  Level at(std::size_t i, std::uint64_t r, int need) const {
    return table_[(i * (m_ + 1) + r) * 3 + static_cast<std::size_t>(need)];
  }

  std::size_t h_;
  std::uint64_t m_;
  Combine mode_;
  ChildValue value_;
  std::vector<Level> table_;
};

void require_positive(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

void require_limit(std::uint64_t n, std::uint64_t limit, const char* what) {
  if (n > limit) {
    throw LimitExceeded(std::string(what) + " is limited to n <= " +
                            std::to_string(limit),
                        limit);
  }
}

std::vector<Level> uncapped_totals(std::uint64_t n, const WeightVector& w) {
  std::vector<Level> total(n + 1, 0);
  for (std::uint64_t m = 2; m <= n; ++m) {
    SplitSearch split(w.arity(), m, Combine::sum,
                      [&](std::size_t i, std::uint64_t c) {
                        return static_cast<Level>(c) * w[i] + total[c];
                      });
    total[m] = split.best();
  }
  return total;
}

}  // namespace

std::uint64_t dp_worst_limit(std::size_t arity) {
  switch (arity) {
    case 2: return 512;
    case 3: return 128;
    case 4: return 64;
    default: return 32;
  }
}

std::vector<Level> dp_worst_table(std::uint64_t n, const WeightVector& w) {
  require_positive(n);
  require_limit(n, dp_worst_limit(w.arity()), "dp_worst");
  std::vector<Level> worst(n + 1, 0);
  for (std::uint64_t m = 2; m <= n; ++m) {
    SplitSearch split(w.arity(), m, Combine::max,
                      [&](std::size_t i, std::uint64_t c) {
                        return w[i] + worst[c];
                      });
    worst[m] = split.best();
  }
  return worst;
}

Level dp_worst(std::uint64_t n, const WeightVector& weights) {
  return dp_worst_table(n, weights).back();
}

Level dp_expected(std::uint64_t n, const WeightVector& w,
                  std::optional<Level> level_cap) {
  require_positive(n);
  require_limit(n, kDpExpectedLimit, "dp_expected");
  if (!level_cap) return uncapped_totals(n, w).back();

  const Level requested = *level_cap;
  if (requested < 0) {
    throw std::domain_error("level cap " + std::to_string(requested) +
                            " is infeasible for n = " + std::to_string(n));
  }
  // No valid tree has more than n-1 probes on a path, so larger caps bind
  // nothing.
  const Level cap =
      std::min(requested, static_cast<Level>(n - 1) * w.max_weight());
  // total[b][m]: least total for m items with every leaf level <= b.
  std::vector<std::vector<Level>> total(static_cast<std::size_t>(cap) + 1,
                                        std::vector<Level>(n + 1, kInf));
  for (Level b = 0; b <= cap; ++b) {
    auto& row = total[static_cast<std::size_t>(b)];
    row[1] = 0;
    for (std::uint64_t m = 2; m <= n; ++m) {
      SplitSearch split(w.arity(), m, Combine::sum,
                        [&](std::size_t i, std::uint64_t c) {
                          const Level sub = b - w[i];
                          if (sub < 0) return kInf;
                          const Level below =
                              total[static_cast<std::size_t>(sub)][c];
                          if (below == kInf) return kInf;
                          return static_cast<Level>(c) * w[i] + below;
                        });
      row[m] = split.best();
    }
  }
  const Level result = total[static_cast<std::size_t>(cap)][n];
  if (result == kInf) {
    throw std::domain_error("level cap " + std::to_string(requested) +
                            " is below the least worst-case cost for n = " +
                            std::to_string(n));
  }
  return result;
}

std::vector<CostMatrixEntry> cost_matrix(std::uint64_t n,
                                         const WeightVector& w) {
  const std::vector<Level> worst = dp_worst_table(n, w);
  const std::vector<Level> total = uncapped_totals(n, w);
  std::vector<std::vector<std::uint64_t>> parts(n + 1);
  for (std::uint64_t m = 2; m <= n; ++m) {
    SplitSearch split(w.arity(), m, Combine::max,
                      [&](std::size_t i, std::uint64_t c) {
                        return w[i] + worst[c];
                      });
    parts[m] = split.composition();
  }
  std::vector<CostMatrixEntry> entries;
  entries.reserve(n * (n + 1) / 2);
  for (std::uint64_t first = 0; first < n; ++first) {
    for (std::uint64_t last = first; last < n; ++last) {
      const std::uint64_t m = last - first + 1;
      CostMatrixEntry e{first, last, worst[m], total[m], {}};
      if (m > 1) {
        auto boundary = static_cast<std::int64_t>(first) - 1;
        for (std::size_t i = 0; i + 1 < parts[m].size(); ++i) {
          boundary += static_cast<std::int64_t>(parts[m][i]);
          e.best_split.push_back(boundary);
        }
      }
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

Rational midpoint_binary_cost(std::uint64_t n, const Rational& cost_true,
                              const Rational& cost_false) {
  require_positive(n);
  // [l, r] splits into [l, mid] and [mid+1, r]; only lengths matter.
  std::map<std::uint64_t, Rational> memo;
  std::function<Rational(std::uint64_t)> cost = [&](std::uint64_t m) {
    if (m == 1) return Rational{0};
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    const std::uint64_t left = (m + 1) / 2;
    Rational value = std::max<Rational>(cost_true + cost(left),
                                        cost_false + cost(m - left));
    memo.emplace(m, value);
    return value;
  };
  return cost(n);
}

Rational packed_binary_cost(std::uint64_t n, const Rational& cost_true,
                            const Rational& cost_false) {
  require_positive(n);
  std::map<std::uint64_t, Rational> memo;
  std::function<Rational(std::uint64_t)> cost = [&](std::uint64_t m) {
    if (m == 1) return Rational{0};
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    const std::uint64_t half = std::bit_floor(m - 1);
    Rational value = std::max<Rational>(cost_true + cost(half),
                                        cost_false + cost(m - half));
    memo.emplace(m, value);
    return value;
  };
  return cost(n);
}

}  // namespace fibsearch
