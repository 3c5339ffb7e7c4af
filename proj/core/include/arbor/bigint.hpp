#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace arbor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt big_pow(const BigInt& base, unsigned exponent);
BigInt big_lcm(const BigInt& a, const BigInt& b);

/// `k` with `value == base^k`, if such `k` exists.
std::optional<unsigned> exact_log(const BigInt& value, unsigned base);

/// Renders `value` as `"p^k = <decimal>"` when it is a power of `base`
/// greater than one, and as plain decimal otherwise.
std::string render_power(const BigInt& value, unsigned base);

std::string render_rational(const Rational& q);

}  // namespace arbor
