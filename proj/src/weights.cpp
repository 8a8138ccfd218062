#include "fibsearch/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fibsearch {

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

void validate_canonical(const std::vector<Level>& w) {
  if (w.size() < 2) {
    throw InvalidWeights("need at least 2 weights, got " +
                         std::to_string(w.size()));
  }
  Level g = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1) {
      throw InvalidWeights("weight " + std::to_string(i) + " (" +
                           std::to_string(w[i]) + ") is not positive");
    }
    if (w[i] > kMaxCanonicalWeight) {
      throw InvalidWeights("weight " + std::to_string(i) + " (" +
                           std::to_string(w[i]) +
                           ") exceeds the canonical weight limit " +
                           std::to_string(kMaxCanonicalWeight));
    }
    g = std::gcd(g, w[i]);
  }
  if (g != 1) {
    throw InvalidWeights("integer weights must be coprime; use "
                         "canonical_weights() to reduce them");
  }
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

WeightVector::WeightVector(std::initializer_list<Level> weights)
    : WeightVector(std::vector<Level>(weights)) {}

WeightVector::WeightVector(std::vector<Level> weights)
    : WeightVector(std::move(weights), Rational{1}) {}

WeightVector::WeightVector(std::vector<Level> weights, Rational scale)
    : weights_(std::move(weights)), scale_(std::move(scale)) {
  validate_canonical(weights_);
  auto [lo, hi] = std::minmax_element(weights_.begin(), weights_.end());
  ell_ = *lo;
  u_ = *hi;
}

std::size_t WeightVector::fitting(Level budget) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(),
                    [budget](Level w) { return w <= budget; }));
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out;
}

WeightVector canonical_weights(std::span<const Rational> raw) {
  if (raw.size() < 2) {
    throw InvalidWeights("need at least 2 weights, got " +
                         std::to_string(raw.size()));
  }
  BigInt lcm_den = 1;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] <= 0) {
      throw InvalidWeights("weight " + std::to_string(i) + " (" +
                           to_string(raw[i]) + ") is not positive");
    }
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(raw[i]));
  }
  std::vector<BigInt> scaled;
  BigInt g = 0;
  for (const Rational& r : raw) {
    BigInt v = numerator(r) * (lcm_den / denominator(r));
    g = boost::multiprecision::gcd(g, v);
    scaled.push_back(std::move(v));
  }
  std::vector<Level> canonical;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    BigInt c = scaled[i] / g;
    if (c > kMaxCanonicalWeight) {
      throw InvalidWeights("weight " + std::to_string(i) + " (" +
                           to_string(raw[i]) +
                           ") is too large relative to the others: canonical "
                           "value " + c.str() + " exceeds " +
                           std::to_string(kMaxCanonicalWeight));
    }
    canonical.push_back(c.convert_to<Level>());
  }
  return WeightVector(std::move(canonical), Rational(g, lcm_den));
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw InvalidWeights("'" + std::string(text) + "' is not a rational number");
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const BigInt d{std::string(den)};
    if (d == 0) {
      throw InvalidWeights("'" + std::string(text) + "' has a zero denominator");
    }
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    BigInt den = boost::multiprecision::pow(BigInt(10),
                                            static_cast<unsigned>(frac.size()));
    value = Rational(w * den + f, den);
  } else {
    if (!all_digits(s)) return fail();
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

WeightVector parse_weights(std::string_view text) {
  std::vector<Rational> raw;
  std::size_t index = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    try {
      raw.push_back(parse_rational(item));
    } catch (const InvalidWeights& e) {
      throw InvalidWeights("weight " + std::to_string(index) + ": " + e.what());
    }
    ++index;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return canonical_weights(raw);
}

}  // namespace fibsearch
