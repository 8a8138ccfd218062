#include "fibsearch/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "fibsearch/array_probe.hpp"
#include "fibsearch/decision_tree.hpp"
#include "fibsearch/oracle.hpp"
#include "fibsearch/search.hpp"
#include "fibsearch/sequences.hpp"
#include "fibsearch/varn.hpp"

namespace fibsearch::cli {

namespace {

using Json = nlohmann::ordered_json;

// Largest n for the exhaustive per-target runs behind `compare`.
constexpr std::uint64_t kCompareLimit = 1000000;
// Largest index for `seq`.
constexpr Level kSeqLimit = 100000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json rational_json(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) {
    const BigInt num = numerator(value);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return num.convert_to<std::int64_t>();
    }
  }
  return to_string(value);
}

Json bigint_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

Json weights_json(const WeightVector& w) {
  Json arr = Json::array();
  for (Level x : w.weights()) arr.push_back(x);
  return arr;
}

// --- seq -------------------------------------------------------------------

struct SeqOptions {
  std::string weights;
  std::string kind = "G";
  Level upto = 0;
};

void run_seq(const SeqOptions& o, std::ostream& out) {
  if (o.upto < 0) throw UsageError("--upto must be nonnegative");
  if (o.upto > kSeqLimit) {
    throw LimitExceeded("seq is limited to --upto <= " + std::to_string(kSeqLimit),
                        kSeqLimit);
  }
  FibTable table(parse_weights(o.weights));
  table.extend_to(o.upto);
  const bool big = o.kind == "G";
  for (Level k = 0; k <= o.upto; ++k) {
    out << k << '\t' << (big ? table.G_at(k) : table.g_at(k)) << '\n';
  }
}

// --- bound -----------------------------------------------------------------

struct BoundOptions {
  std::string weights;
  std::string n;
  std::string unit_cost = "1";
};

void run_bound(const BoundOptions& o, std::ostream& out) {
  const WeightVector w = parse_weights(o.weights);
  const Rational unit = parse_rational(o.unit_cost);
  BigInt n;
  try {
    n = BigInt(o.n);
  } catch (const std::exception&) {
    throw UsageError("--n must be a positive integer, got '" + o.n + "'");
  }
  if (n < 1) throw UsageError("--n must be a positive integer, got '" + o.n + "'");
  FibTable table(w);
  const MinLevel min = min_level_for(table, n);
  Json j;
  j["k"] = min.k;
  j["capacity"] = bigint_json(min.capacity);
  j["cost"] = rational_json(Rational(min.k) * w.scale() * unit);
  out << j.dump() << '\n';
}

// --- search ----------------------------------------------------------------

struct SearchOptions {
  std::string weights;
  std::string array;
  std::string key;
  std::string mode = "short";
  bool trace = false;
  bool verify_sorted = false;
};

double parse_number_key(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(value)) {
    throw UsageError("--key must be a number for a numeric array, got '" + text +
                     "'");
  }
  return value;
}

void run_search(const SearchOptions& o, std::ostream& out) {
  const WeightVector w = parse_weights(o.weights);
  const SearchMode mode = parse_search_mode(o.mode);
  std::ifstream in(o.array);
  if (!in) throw std::runtime_error("cannot open array file '" + o.array + "'");
  Json data;
  try {
    data = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("array file '" + o.array + "' is not JSON: " + e.what());
  }
  if (!data.is_array() || data.empty()) {
    throw std::runtime_error("array file must hold a nonempty JSON array");
  }
  const bool numeric = data.front().is_number();
  if (!numeric && !data.front().is_string()) {
    throw std::runtime_error("array entries must be numbers or strings");
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].is_number() != numeric || (!numeric && !data[i].is_string())) {
      throw std::runtime_error("array entry " + std::to_string(i) +
                               " has a different type than entry 0");
    }
  }

  ArraySearchResult result;
  if (numeric) {
    const auto values = data.get<std::vector<double>>();
    result = search_array<double>(values, parse_number_key(o.key), w, mode,
                                  o.verify_sorted);
  } else {
    const auto values = data.get<std::vector<std::string>>();
    result = search_array<std::string>(values, o.key, w, mode, o.verify_sorted);
  }

  Json j;
  j["n"] = data.size();
  j["weights"] = weights_json(w);
  j["mode"] = std::string(to_string(mode));
  if (o.trace) {
    Json steps = Json::array();
    for (const TraceStep& s : result.trace.steps) {
      Json step;
      step["interval"] = Json::array({s.request.left, s.request.right});
      step["boundaries"] = s.request.boundaries;
      step["outcome"] = s.outcome.outcome_index;
      step["cost"] = s.outcome.charged_cost;
      steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
  }
  j["total_cost"] = result.trace.total_cost;
  j["scaled_cost"] = rational_json(result.trace.scaled_cost);
  j["result_index"] = result.trace.result_index;
  j["found"] = result.found;
  out << j.dump() << '\n';
}

// --- tree ------------------------------------------------------------------

struct TreeOptions {
  std::string weights;
  Level level = 0;
  std::string kind = "search";
  std::optional<std::uint64_t> prune_to;
  std::string format = "dot";
};

void run_tree(const TreeOptions& o, std::ostream& out) {
  const WeightVector w = parse_weights(o.weights);
  if (o.level < 0) throw UsageError("--level must be nonnegative");
  if (o.kind == "counting") {
    if (o.prune_to) throw UsageError("--prune-to applies to search trees only");
    out << to_dot(build_counting_tree(w, o.level));
    return;
  }
  Tree tree = build_search_tree(w, o.level);
  if (o.prune_to) tree = prune_to_size(tree, *o.prune_to);
  out << to_dot(tree);
}

// --- varn ------------------------------------------------------------------

struct VarnOptions {
  std::string weights;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> index;
  bool table = false;
};

void run_varn(const VarnOptions& o, std::ostream& out) {
  const WeightVector w = parse_weights(o.weights);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (!o.index && !o.table) throw UsageError("varn needs --index or --table");
  if (o.index) {
    const Codeword word = encode(o.n, w, *o.index);
    out << *o.index << '\t' << letters_to_string(word.letters) << '\t'
        << word.cost << '\n';
    return;
  }
  const std::vector<Codeword> table = code_table(o.n, w);
  out << code_table_tsv(table);
}

// --- oracle ----------------------------------------------------------------

struct OracleOptions {
  std::string weights;
  std::uint64_t n = 0;
  bool expected = false;
  std::optional<Level> level_cap;
};

void run_oracle(const OracleOptions& o, std::ostream& out) {
  const WeightVector w = parse_weights(o.weights);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.level_cap && !o.expected) {
    throw UsageError("--level-cap requires --expected");
  }
  Json j;
  j["n"] = o.n;
  j["weights"] = weights_json(w);
  j["worst"] = dp_worst(o.n, w);
  if (o.expected) {
    if (o.level_cap) j["level_cap"] = *o.level_cap;
    j["total"] = dp_expected(o.n, w, o.level_cap);
  }
  out << j.dump() << '\n';
}

// --- compare ---------------------------------------------------------------

struct CompareOptions {
  std::string weights;
  std::uint64_t n = 0;
  std::string unit_cost = "1";
};

std::string csv_rational(const Rational& value) { return to_string(value); }

void run_compare(const CompareOptions& o, std::ostream& out) {
  const WeightVector w = parse_weights(o.weights);
  const Rational unit = parse_rational(o.unit_cost);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.n > kCompareLimit) {
    throw LimitExceeded("compare is limited to n <= " +
                            std::to_string(kCompareLimit),
                        kCompareLimit);
  }
  const Rational per_unit = w.scale() * unit;
  const Level fib_worst = worst_case_cost(o.n, w, SearchMode::short_form);
  const Level fib_total = total_cost_sum(o.n, w, SearchMode::full_form);

  std::string dp_worst_cell;
  std::string dp_total_cell;
  if (o.n <= dp_worst_limit(w.arity())) {
    const Level worst = dp_worst(o.n, w);
    dp_worst_cell = csv_rational(Rational(worst) * per_unit);
    if (o.n <= kDpExpectedLimit) {
      dp_total_cell = csv_rational(Rational(dp_expected(o.n, w, worst)) * per_unit);
    }
  }
  std::string midpoint_cell;
  std::string packed_cell;
  if (w.arity() == 2) {
    const Rational ct = Rational(w[0]) * per_unit;
    const Rational cf = Rational(w[1]) * per_unit;
    midpoint_cell = csv_rational(midpoint_binary_cost(o.n, ct, cf));
    packed_cell = csv_rational(packed_binary_cost(o.n, ct, cf));
  }
  out << "n,weights,fib_worst,fib_total,dp_worst,dp_total,midpoint,packed\n";
  out << o.n << ",\"" << w.to_string() << "\","
      << csv_rational(Rational(fib_worst) * per_unit) << ','
      << csv_rational(Rational(fib_total) * per_unit) << ',' << dp_worst_cell
      << ',' << dp_total_cell << ',' << midpoint_cell << ',' << packed_cell
      << '\n';
}

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Search and coding with unequal comparison costs", "fibsearch"};
  app.require_subcommand(1);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Sequence values g(k) or G(k) as TSV");
  seq_cmd->add_option("--weights", seq.weights, "Outcome costs, e.g. 1,3")->required();
  seq_cmd->add_option("--kind", seq.kind)->check(CLI::IsMember({"g", "G"}));
  seq_cmd->add_option("--upto", seq.upto)->required();

  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Least worst-case cost for n items as JSON");
  bound_cmd->add_option("--weights", bound.weights)->required();
  bound_cmd->add_option("--n", bound.n)->required();
  bound_cmd->add_option("--unit-cost", bound.unit_cost);

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Search a sorted JSON array");
  search_cmd->add_option("--weights", search.weights)->required();
  search_cmd->add_option("--array", search.array)->required();
  search_cmd->add_option("--key", search.key)->required();
  search_cmd->add_option("--mode", search.mode)->check(CLI::IsMember({"short", "full"}));
  search_cmd->add_flag("--trace", search.trace);
  search_cmd->add_flag("--verify-sorted", search.verify_sorted);

  TreeOptions tree;
  auto* tree_cmd = app.add_subcommand("tree", "Explicit decision tree as DOT");
  tree_cmd->add_option("--weights", tree.weights)->required();
  tree_cmd->add_option("--level", tree.level)->required();
  tree_cmd->add_option("--kind", tree.kind)->check(CLI::IsMember({"search", "counting"}));
  tree_cmd->add_option("--prune-to", tree.prune_to);
  tree_cmd->add_option("--format", tree.format)->check(CLI::IsMember({"dot"}));

  VarnOptions varn;
  auto* varn_cmd = app.add_subcommand("varn", "Alphabetic code words as TSV");
  varn_cmd->add_option("--weights", varn.weights)->required();
  varn_cmd->add_option("--n", varn.n)->required();
  auto* index_opt = varn_cmd->add_option("--index", varn.index);
  auto* table_opt = varn_cmd->add_flag("--table", varn.table);
  index_opt->excludes(table_opt);

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by dynamic programming");
  oracle_cmd->add_option("--weights", oracle.weights)->required();
  oracle_cmd->add_option("--n", oracle.n)->required();
  oracle_cmd->add_flag("--expected", oracle.expected);
  oracle_cmd->add_option("--level-cap", oracle.level_cap);

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand("compare", "Costs against binary search as CSV");
  compare_cmd->add_option("--weights", compare.weights)->required();
  compare_cmd->add_option("--n", compare.n)->required();
  compare_cmd->add_option("--unit-cost", compare.unit_cost);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 2;
  }

  // Buffer so a failing command never leaves a partial artifact behind.
  std::ostringstream buffer;
  try {
    if (seq_cmd->parsed()) {
      run_seq(seq, buffer);
    } else if (bound_cmd->parsed()) {
      run_bound(bound, buffer);
    } else if (search_cmd->parsed()) {
      run_search(search, buffer);
    } else if (tree_cmd->parsed()) {
      run_tree(tree, buffer);
    } else if (varn_cmd->parsed()) {
      run_varn(varn, buffer);
    } else if (oracle_cmd->parsed()) {
      run_oracle(oracle, buffer);
    } else if (compare_cmd->parsed()) {
      run_compare(compare, buffer);
    }
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace fibsearch::cli
