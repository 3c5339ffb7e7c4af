#include "arbor/bigint.hpp"

namespace arbor {

BigInt big_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

std::optional<unsigned> exact_log(const BigInt& value, unsigned base) {
  if (value < 1 || base < 2) return std::nullopt;
  BigInt v = value;
  unsigned k = 0;
  while (v > 1) {
    if (v % base != 0) return std::nullopt;
    v /= base;
    ++k;
  }
  return k;
}

std::string render_power(const BigInt& value, unsigned base) {
  const std::string decimal = value.str();
  if (const auto k = exact_log(value, base); k && *k > 0) {
    return std::to_string(base) + "^" + std::to_string(*k) + " = " + decimal;
  }
  return decimal;
}

std::string render_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace arbor
