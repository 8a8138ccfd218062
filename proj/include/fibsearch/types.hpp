#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibsearch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Weighted depth of a node, or an accumulated comparison cost, in canonical
// integer units.
using Level = std::int64_t;

// Thrown when an explicit structure or an oracle would exceed its desk-scale
// size limit.
class LimitExceeded : public std::length_error {
 public:
  LimitExceeded(const std::string& what, std::uint64_t limit)
      : std::length_error(what), limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

// Saturating conversion of a nonnegative exact integer to 64 bits.
inline std::uint64_t saturate_u64(const BigInt& value,
                                  std::uint64_t ceiling = UINT64_MAX) {
  if (value <= 0) return 0;
  if (value >= ceiling) return ceiling;
  return value.convert_to<std::uint64_t>();
}

// Renders a rational as an integer when it is one, otherwise as "p/q".
std::string to_string(const Rational& value);

}  // namespace fibsearch
