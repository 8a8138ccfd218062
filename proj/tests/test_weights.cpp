#include <gtest/gtest.h>

#include <vector>

#include "fibsearch/weights.hpp"

using namespace fibsearch;

TEST(Weights, KeepsOrderAndExtremes) {
  WeightVector w{3, 1};
  EXPECT_EQ(w.arity(), 2u);
  EXPECT_EQ(w[0], 3);
  EXPECT_EQ(w[1], 1);
  EXPECT_EQ(w.min_weight(), 1);
  EXPECT_EQ(w.max_weight(), 3);
  EXPECT_EQ(w.to_string(), "3,1");
  EXPECT_EQ(w.fitting(0), 0u);
  EXPECT_EQ(w.fitting(2), 1u);
  EXPECT_EQ(w.fitting(3), 2u);
}

TEST(Weights, RejectsInvalidIntegerVectors) {
  EXPECT_THROW(WeightVector({1}), InvalidWeights);
  EXPECT_THROW(WeightVector({0, 1}), InvalidWeights);
  EXPECT_THROW(WeightVector({-1, 2}), InvalidWeights);
  EXPECT_THROW(WeightVector({2, 4}), InvalidWeights);
  EXPECT_THROW(WeightVector({1, kMaxCanonicalWeight + 1}), InvalidWeights);
}

TEST(Weights, ParsesRationals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational(" 0.25 "), Rational(1, 4));
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
}

TEST(Weights, CanonicalFormScalesBack) {
  WeightVector w = parse_weights("0.5,3/2");
  EXPECT_EQ(w.to_string(), "1,3");
  EXPECT_EQ(w.scale(), Rational(1, 2));

  WeightVector big = parse_weights("500,1500");
  EXPECT_EQ(big.to_string(), "1,3");
  EXPECT_EQ(big.scale(), Rational(500));

  std::vector<Rational> raw{Rational(2, 3), Rational(1, 2), Rational(5, 6)};
  WeightVector three = canonical_weights(raw);
  EXPECT_EQ(three.to_string(), "4,3,5");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    EXPECT_EQ(three.scale() * three[i], raw[i]);
  }
}

TEST(Weights, ParseErrorsNameTheEntry) {
  try {
    parse_weights("1,x");
    FAIL() << "expected a throw";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("weight 1"), std::string::npos);
  }
  EXPECT_THROW(parse_weights("1"), std::invalid_argument);
  EXPECT_THROW(parse_weights("1,0"), std::invalid_argument);
  EXPECT_THROW(parse_weights("1,-2"), std::invalid_argument);
}
