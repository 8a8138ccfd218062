#include <gtest/gtest.h>

#include <vector>

#include "fibsearch/array_probe.hpp"
#include "fibsearch/decision_tree.hpp"
#include "fibsearch/oracle.hpp"
#include "fibsearch/search.hpp"
#include "fibsearch/sequences.hpp"
#include "support/reference.hpp"

using namespace fibsearch;

namespace {

const std::vector<std::vector<Level>> kGrid = {
    {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4},
    {1, 1, 1}, {1, 2, 2}, {1, 2, 3}, {3, 1}, {2, 1, 3}};

const SearchMode kModes[] = {SearchMode::short_form, SearchMode::full_form};

std::vector<std::uint32_t> outcomes(const SearchTrace& t) {
  std::vector<std::uint32_t> out;
  for (const auto& s : t.steps) {
    out.push_back(static_cast<std::uint32_t>(s.outcome.outcome_index));
  }
  return out;
}

}  // namespace

TEST(Search, LeftmostPathSmallExample) {
  SearchTrace t = fib_search(8, WeightVector{1, 2}, target_probe(0),
                             SearchMode::short_form);
  ASSERT_EQ(t.steps.size(), 4u);
  const std::int64_t expected[] = {4, 2, 1, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(t.steps[i].request.boundaries, std::vector<std::int64_t>{expected[i]});
    EXPECT_EQ(t.steps[i].outcome.outcome_index, 0u);
    EXPECT_EQ(t.steps[i].outcome.charged_cost, 1);
  }
  EXPECT_EQ(t.total_cost, 4);
  EXPECT_EQ(t.result_index, 0u);
}

TEST(Search, HundredOneWorstCase) {
  EXPECT_EQ(worst_case_cost(101, WeightVector{1, 3}, SearchMode::short_form), 14);
  EXPECT_EQ(worst_case_cost(101, WeightVector{1, 3}, SearchMode::full_form), 14);
  EXPECT_EQ(worst_case_cost(8, WeightVector{1, 2}, SearchMode::short_form), 5);
  for (std::uint64_t t = 0; t < 4; ++t) {
    EXPECT_LE(fib_search(4, WeightVector{1, 1}, target_probe(t),
                         SearchMode::short_form)
                  .total_cost,
              2);
  }
}

TEST(Search, ScaledCost) {
  WeightVector w = parse_weights("500,1500");
  Level worst = 0;
  Rational scaled{0};
  for (std::uint64_t t = 0; t < 101; ++t) {
    SearchTrace trace = fib_search(101, w, target_probe(t), SearchMode::short_form);
    if (trace.total_cost > worst) {
      worst = trace.total_cost;
      scaled = trace.scaled_cost;
    }
  }
  EXPECT_EQ(scaled, Rational(7000));
  SearchTrace unit = fib_search(101, WeightVector{1, 3}, target_probe(0),
                                SearchMode::short_form, Rational(1, 4));
  EXPECT_EQ(unit.scaled_cost, Rational(unit.total_cost, 4));
}

TEST(Search, TernaryAtCapacity) {
  WeightVector w{1, 2, 3};
  FibTable table(w);
  for (Level k = 0; k <= 12; ++k) {
    if (table.G(k) == table.G(k - 1)) continue;
    const auto n = table.G(k).convert_to<std::uint64_t>();
    for (SearchMode mode : kModes) {
      ASSERT_EQ(worst_case_cost(n, w, mode), k);
    }
  }
}

TEST(Search, FindsEveryTargetWithinBudget) {
  for (const auto& raw : kGrid) {
    WeightVector w(raw);
    for (std::uint64_t n = 1; n <= 80; ++n) {
      for (SearchMode mode : kModes) {
        SearchPlan plan(w, n, mode);
        for (std::uint64_t target = 0; target < n; ++target) {
          SearchTrace t = fib_search(plan, target_probe(target));
          ASSERT_EQ(t.result_index, target);
          ASSERT_LE(t.total_cost, plan.budget());
          Level sum = 0;
          for (const auto& s : t.steps) {
            ASSERT_EQ(s.outcome.charged_cost, w[s.outcome.outcome_index]);
            sum += s.outcome.charged_cost;
          }
          ASSERT_EQ(sum, t.total_cost);
        }
      }
    }
  }
}

TEST(Search, BudgetInvariant) {
  for (const auto& raw : kGrid) {
    WeightVector w(raw);
    for (std::uint64_t n : {2u, 7u, 33u, 100u}) {
      for (SearchMode mode : kModes) {
        SearchPlan plan(w, n, mode);
        for (std::uint64_t target = 0; target < n; ++target) {
          SearchTrace t = fib_search(plan, target_probe(target));
          ASSERT_EQ(t.z_history.size(), t.steps.size() + 1);
          ASSERT_EQ(t.z_history.front() <= plan.budget(), true);
          for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const auto& r = t.steps[i].request;
            const auto size = static_cast<std::uint64_t>(r.right - r.left + 1);
            ASSERT_LE(size, plan.G(t.z_history[i]));
            ASSERT_LE(t.z_history[i + 1],
                      t.z_history[i] - t.steps[i].outcome.charged_cost);
          }
          ASSERT_GE(t.z_history.back(), 0);
        }
      }
    }
  }
}

TEST(Search, PlanTablesSplitGrowth) {
  for (const auto& raw : kGrid) {
    WeightVector w(raw);
    FibTable table(w);
    const auto n = table.G(24).convert_to<std::uint64_t>();
    SearchPlan plan(w, n, SearchMode::full_form);
    for (Level b = 1; b <= plan.budget(); ++b) {
      ASSERT_EQ(plan.G(b) - plan.G(b - 1),
                plan.plain_sites(b) + plan.conversion_size() * plan.conversion_sites(b))
          << w.to_string() << " b=" << b;
    }
  }
}

TEST(Search, TracesFollowExplicitTrees) {
  for (const auto& raw : kGrid) {
    WeightVector w(raw);
    FibTable table(w);
    for (std::uint64_t n = 1; n <= 60; ++n) {
      const Level k = min_level_for(table, n).k;
      Tree complete = build_search_tree(w, k);
      Tree pruned = prune_to_size(complete, n);
      Tree truncated = truncate_to_leftmost(complete, n);
      SearchPlan full(w, n, SearchMode::full_form);
      SearchPlan shortp(w, n, SearchMode::short_form);
      for (std::uint64_t j = 0; j < n; ++j) {
        ASSERT_EQ(outcomes(fib_search(full, target_probe(j))), pruned.path_to_leaf(j))
            << w.to_string() << " n=" << n << " j=" << j;
        ASSERT_EQ(outcomes(fib_search(shortp, target_probe(j))),
                  truncated.path_to_leaf(j))
            << w.to_string() << " n=" << n << " j=" << j;
      }
    }
  }
}

TEST(Search, FullFormSevenBinary) {
  const Level sum = total_cost_sum(7, WeightVector{1, 1}, SearchMode::full_form);
  EXPECT_EQ(sum, reference::brute_total({1, 1}, 7, 3));
  EXPECT_EQ(sum, 20);
}

TEST(Search, FullFormBeatsShortOnAverage) {
  WeightVector w{1, 3};
  for (std::uint64_t n = 1; n <= 60; ++n) {
    EXPECT_LE(total_cost_sum(n, w, SearchMode::full_form),
              total_cost_sum(n, w, SearchMode::short_form));
  }
}

TEST(Search, SingleItemNeedsNoProbe) {
  for (SearchMode mode : kModes) {
    SearchTrace t = fib_search(1, WeightVector{1, 3}, target_probe(0), mode);
    EXPECT_TRUE(t.steps.empty());
    EXPECT_EQ(t.total_cost, 0);
    EXPECT_EQ(t.z_history, std::vector<Level>{0});
  }
}

TEST(Search, InconsistentProbeKeepsTrace) {
  int calls = 0;
  Probe liar = [&](const ProbeRequest&) -> std::size_t {
    return ++calls == 1 ? 0 : 7;
  };
  try {
    fib_search(50, WeightVector{1, 2}, liar, SearchMode::short_form);
    FAIL() << "expected a throw";
  } catch (const InconsistentProbe& e) {
    EXPECT_EQ(e.trace().steps.size(), 1u);
  }
}

TEST(Search, ModeNames) {
  EXPECT_EQ(parse_search_mode("short"), SearchMode::short_form);
  EXPECT_EQ(parse_search_mode("full"), SearchMode::full_form);
  EXPECT_EQ(to_string(SearchMode::full_form), "full");
  EXPECT_THROW(parse_search_mode("long"), std::invalid_argument);
  EXPECT_THROW(SearchPlan(WeightVector{1, 2}, 0, SearchMode::short_form),
               std::invalid_argument);
}

TEST(ArrayProbe, DecimalsTenToTwenty) {
  std::vector<double> values;
  for (int i = 0; i <= 100; ++i) values.push_back(10.0 + i / 10.0);
  WeightVector w{1, 3};
  auto hit = search_array<double>(values, 20.0, w, SearchMode::short_form, true);
  EXPECT_TRUE(hit.found);
  EXPECT_EQ(hit.trace.result_index, 100u);

  auto miss = search_array<double>(values, 20.05, w, SearchMode::short_form);
  EXPECT_FALSE(miss.found);
  EXPECT_EQ(miss.trace.result_index, 100u);

  for (std::size_t i = 0; i < values.size(); ++i) {
    for (SearchMode mode : kModes) {
      auto r = search_array<double>(values, values[i], w, mode);
      ASSERT_TRUE(r.found);
      ASSERT_EQ(r.trace.result_index, i);
    }
  }
}

TEST(ArrayProbe, TernaryAndDuplicates) {
  std::vector<int> values{1, 2, 2, 2, 5, 8, 8, 13, 21, 34, 34, 55};
  WeightVector w{1, 2, 3};
  for (int key : {2, 8, 34}) {
    auto r = search_array<int>(values, key, w, SearchMode::full_form);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(values[r.trace.result_index], key);
    EXPECT_EQ(r.trace.result_index,
              static_cast<std::uint64_t>(
                  std::lower_bound(values.begin(), values.end(), key) - values.begin()));
  }
  EXPECT_FALSE(search_array<int>(values, 0, w, SearchMode::full_form).found);
  EXPECT_FALSE(search_array<int>(values, 60, w, SearchMode::full_form).found);
}

TEST(ArrayProbe, SingleValue) {
  std::vector<std::string> values{"m"};
  auto r = search_array<std::string>(values, "z", WeightVector{1, 2},
                                     SearchMode::short_form);
  EXPECT_TRUE(r.trace.steps.empty());
  EXPECT_FALSE(r.found);
  EXPECT_TRUE(search_array<std::string>(values, "m", WeightVector{1, 2},
                                        SearchMode::short_form)
                  .found);
}

TEST(ArrayProbe, UnsortedInputIsRejected) {
  std::vector<int> values{1, 3, 2, 4};
  try {
    search_array<int>(values, 3, WeightVector{1, 2}, SearchMode::short_form, true);
    FAIL() << "expected a throw";
  } catch (const UnsortedInput& e) {
    EXPECT_EQ(e.index(), 2u);
  }
  EXPECT_THROW(search_array<int>(std::vector<int>{}, 1, WeightVector{1, 2},
                                 SearchMode::short_form),
               std::invalid_argument);
}

TEST(Search, WideWeightsWithoutUnitCost) {
  // Without a unit weight the full form stays worst-case optimal, but its
  // total can miss the capped optimum by a little.
  WeightVector w{2, 2, 3};
  FibTable table(w);
  const Level k = min_level_for(table, 14).k;
  EXPECT_EQ(worst_case_cost(14, w, SearchMode::full_form), k);
  EXPECT_EQ(total_cost_sum(14, w, SearchMode::full_form), 81);
  EXPECT_EQ(dp_expected(14, w, k), 80);
}
