#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace hen {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational> || std::is_same_v<T, Integer>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Bit index of the most significant set bit of |v|; 0 for v == 0.
inline unsigned msb_or_zero(const Integer& v) {
  if (v == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(v)));
}

inline double to_double(double v) { return v; }
inline double to_double(const Integer& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) {
  // cpp_rational -> double loses range for huge numerators; go through log scale then.
  const Integer& num = boost::multiprecision::numerator(v);
  const Integer& den = boost::multiprecision::denominator(v);
  if (msb_or_zero(num) < 1000 && msb_or_zero(den) < 1000) return v.convert_to<double>();
  const long shift = static_cast<long>(msb_or_zero(num)) - static_cast<long>(msb_or_zero(den));
  Rational scaled = v;
  if (shift > 0) scaled /= Rational(Integer(1) << shift);
  else scaled *= Rational(Integer(1) << (-shift));
  return std::ldexp(scaled.convert_to<double>(), static_cast<int>(shift));
}

// Natural logarithm of a positive exact value, usable when the value overflows double.
inline double log_abs(const Integer& v) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = msb_or_zero(v);
  if (bits < 1000) return std::log(std::abs(v.convert_to<double>()));
  const unsigned drop = bits - 60;
  Integer top = boost::multiprecision::abs(v) >> drop;
  return std::log(top.convert_to<double>()) + drop * std::log(2.0);
}

inline double log_abs(const Rational& v) {
  return log_abs(numerator(v)) - log_abs(denominator(v));
}

template <typename T>
T ipow(T base, unsigned exp) {
  T result(1);
  while (exp) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp) base *= base;
  }
  return result;
}

// Exact rational value of a finite double.
inline Rational exact_from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("exact_from_double: non-finite value");
  int e = 0;
  const double m = std::frexp(v, &e);
  const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  Rational r{Integer(mant)};
  const int shift = e - 53;
  if (shift >= 0) r *= Rational(Integer(1) << shift);
  else r /= Rational(Integer(1) << (-shift));
  return r;
}

inline std::string to_string(const Integer& v) { return v.str(); }
inline std::string to_string(const Rational& v) {
  const Integer& d = denominator(v);
  if (d == 1) return numerator(v).str();
  return numerator(v).str() + "/" + d.str();
}

// Accepts "p", "-p" or "p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
    return Integer(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(trim(text.substr(0, slash)));
  Integer den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

// Least common multiple of the denominators, so that den * values are all integers.
inline Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, denominator(v));
  return l;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hen
