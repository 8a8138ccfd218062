#include "fibsearch/search.hpp"

#include <algorithm>
#include <numeric>

#include "fibsearch/sequences.hpp"

namespace fibsearch {

namespace {

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::short_form ? "short" : "full";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "short") return SearchMode::short_form;
  if (text == "full") return SearchMode::full_form;
  throw std::invalid_argument("unknown search mode '" + std::string(text) +
                              "' (expected short or full)");
}

SearchPlan::SearchPlan(WeightVector weights, std::uint64_t n, SearchMode mode)
    : weights_(std::move(weights)), n_(n), mode_(mode) {
  if (n_ < 1) throw std::invalid_argument("search needs n >= 1");
  FibTable table(weights_);
  MinLevel min = min_level_for(table, BigInt(n_));
  k_ = min.k;
  G_.reserve(static_cast<std::size_t>(k_) + 1);
  for (Level b = 0; b <= k_; ++b) G_.push_back(saturate_u64(table.G_at(b)));

  std::vector<Level> sorted(weights_.weights().begin(), weights_.weights().end());
  std::sort(sorted.begin(), sorted.end());
  second_weight_ = sorted[1];
  conversion_size_ = weights_.fitting(second_weight_) - 1;

  if (mode_ != SearchMode::full_form) return;
  // Per remaining budget b: new deepest leaves under already internal nodes
  // (plain) and nodes that turn from leaf into internal (conversions) when
  // the budget grows from b-1 to b. Both obey the tree recurrence.
  plain_.assign(static_cast<std::size_t>(k_) + 1, 0);
  conversion_.assign(static_cast<std::size_t>(k_) + 1, 0);
  for (Level b = 0; b <= k_; ++b) {
    std::uint64_t plain = 0;
    std::uint64_t conv = b == second_weight_ ? 1 : 0;
    if (b >= 1 && weights_.fitting(b - 1) >= 2) {
      plain = static_cast<std::uint64_t>(
          std::count(sorted.begin(), sorted.end(), b));
    }
    if (weights_.fitting(b) >= 2) {
      for (Level w : weights_.weights()) {
        if (w > b) continue;
        plain = add_sat(plain, plain_[static_cast<std::size_t>(b - w)]);
        conv = add_sat(conv, conversion_[static_cast<std::size_t>(b - w)]);
      }
    }
    plain_[static_cast<std::size_t>(b)] = plain;
    conversion_[static_cast<std::size_t>(b)] = conv;
  }
}

std::uint64_t SearchPlan::G(Level b) const {
  if (b < 0) return 0;
  return G_.at(static_cast<std::size_t>(b));
}

std::uint64_t SearchPlan::plain_sites(Level b) const {
  if (b < 0) return 0;
  return plain_.at(static_cast<std::size_t>(b));
}

std::uint64_t SearchPlan::conversion_sites(Level b) const {
  if (b < 0) return 0;
  return conversion_.at(static_cast<std::size_t>(b));
}

SearchPlan::Cursor SearchPlan::root() const {
  Cursor c;
  c.plan_ = this;
  c.left_ = 0;
  c.size_ = n_;
  c.remaining_ = k_;
  if (mode_ == SearchMode::full_form && n_ > 1) {
    const std::uint64_t added = n_ - G(k_ - 1);
    c.plain_ = std::min(added, plain_sites(k_));
    c.conversions_ = added - c.plain_;
  }
  return c;
}

const std::vector<std::uint64_t>& SearchPlan::Cursor::split() {
  if (!split_ready_) {
    if (plan_->mode_ == SearchMode::short_form) {
      compute_short_split();
    } else {
      compute_full_split();
    }
    sizes_.clear();
    for (const Child& child : children_) sizes_.push_back(child.size);
    split_ready_ = true;
  }
  return sizes_;
}

void SearchPlan::Cursor::compute_short_split() {
  const WeightVector& w = plan_->weights_;
  children_.assign(w.arity(), Child{});
  std::uint64_t rest = size_;
  for (std::size_t i = 0; i < w.arity(); ++i) {
    const std::uint64_t take = std::min(rest, plan_->G(remaining_ - w[i]));
    children_[i].size = take;
    rest -= take;
  }
  if (rest != 0) {
    throw std::logic_error("interval larger than the budget allows");
  }
}

void SearchPlan::Cursor::compute_full_split() {
  const WeightVector& w = plan_->weights_;
  const Level b = remaining_;
  children_.assign(w.arity(), Child{});
  if (w.fitting(b - 1) >= 2) {
    std::uint64_t plain = plain_;
    std::uint64_t conv = conversions_;
    for (std::size_t i = 0; i < w.arity(); ++i) {
      Child& child = children_[i];
      if (w[i] == b) {
        if (plain > 0) {
          --plain;
          child.size = 1;
        }
      } else if (w[i] < b) {
        const Level sub = b - w[i];
        child.plain = std::min(plain, plan_->plain_sites(sub));
        child.conversions = std::min(
            conv, mul_sat(plan_->conversion_size_, plan_->conversion_sites(sub)));
        plain -= child.plain;
        conv -= child.conversions;
        child.size = plan_->G(sub - 1) + child.plain + child.conversions;
      }
    }
    if (plain != 0 || conv != 0) {
      throw std::logic_error("full-form allotment does not fit the subtree");
    }
  } else {
    // Conversion site: the node gains its cheapest conversions_+1 children.
    std::vector<std::size_t> order(w.arity());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t c) { return w[a] < w[c]; });
    for (std::uint64_t r = 0; r <= conversions_ && r < order.size(); ++r) {
      children_[order[r]].size = 1;
    }
  }
}

void SearchPlan::Cursor::descend(std::size_t outcome) {
  split();
  if (outcome >= children_.size() || children_[outcome].size == 0) {
    throw std::out_of_range("outcome " + std::to_string(outcome) +
                            " leads to an empty interval");
  }
  std::uint64_t offset = 0;
  for (std::size_t i = 0; i < outcome; ++i) offset += children_[i].size;
  const Child child = children_[outcome];
  left_ += static_cast<std::int64_t>(offset);
  size_ = child.size;
  remaining_ -= plan_->weights_[outcome];
  plain_ = child.plain;
  conversions_ = child.conversions;
  split_ready_ = false;
}

SearchTrace fib_search(const SearchPlan& plan, const Probe& probe,
                       const Rational& unit_cost) {
  SearchTrace trace;
  const WeightVector& w = plan.weights();
  SearchPlan::Cursor cursor = plan.root();
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
    ProbeRequest request;
    request.left = cursor.left();
    request.right = cursor.right();
    std::int64_t last = cursor.left() - 1;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
      last += static_cast<std::int64_t>(sizes[i]);
      request.boundaries.push_back(last);
    }
    trace.z_history.push_back(cursor.remaining());
    const std::size_t outcome = probe(request);
    if (outcome >= sizes.size() || sizes[outcome] == 0) {
      trace.result_index = static_cast<std::uint64_t>(cursor.left());
      throw InconsistentProbe(
          "probe answered outcome " + std::to_string(outcome) +
              " for an empty interval at [" + std::to_string(request.left) +
              ", " + std::to_string(request.right) + "] after " +
              std::to_string(trace.steps.size()) + " probes",
          std::move(trace));
    }
    trace.total_cost += w[outcome];
    trace.steps.push_back({std::move(request), {outcome, w[outcome]}});
    cursor.descend(outcome);
  }
  trace.z_history.push_back(cursor.remaining());
  trace.result_index = static_cast<std::uint64_t>(cursor.left());
  trace.scaled_cost = Rational(trace.total_cost) * w.scale() * unit_cost;
  return trace;
}

SearchTrace fib_search(std::uint64_t n, const WeightVector& weights,
                       const Probe& probe, SearchMode mode,
                       const Rational& unit_cost) {
  return fib_search(SearchPlan(weights, n, mode), probe, unit_cost);
}

Probe target_probe(std::uint64_t target) {
  const auto t = static_cast<std::int64_t>(target);
  return [t](const ProbeRequest& request) -> std::size_t {
    for (std::size_t i = 0; i < request.boundaries.size(); ++i) {
      if (t <= request.boundaries[i]) return i;
    }
    return request.boundaries.size();
  };
}

Level worst_case_cost(std::uint64_t n, const WeightVector& weights,
                      SearchMode mode) {
  SearchPlan plan(weights, n, mode);
  Level worst = 0;
  for (std::uint64_t t = 0; t < n; ++t) {
    worst = std::max(worst, fib_search(plan, target_probe(t)).total_cost);
  }
  return worst;
}

Level total_cost_sum(std::uint64_t n, const WeightVector& weights,
                     SearchMode mode) {
  SearchPlan plan(weights, n, mode);
  Level total = 0;
  for (std::uint64_t t = 0; t < n; ++t) {
    total += fib_search(plan, target_probe(t)).total_cost;
  }
  return total;
}

}  // namespace fibsearch
