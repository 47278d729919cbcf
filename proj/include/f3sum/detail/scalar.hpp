#pragma once

// Backend-typed helpers used by the series kernels. The public API speaks
// Number; kernels are instantiated for double and Rational so inner loops do
// not dispatch per operation.

#include <cmath>
#include <optional>

#include "f3sum/number.hpp"

namespace f3sum::detail {

template <class S>
S unwrap(const Number& x);

template <>
inline double unwrap<double>(const Number& x) {
  return x.float64();
}

template <>
inline Rational unwrap<Rational>(const Number& x) {
  return x.rational();
}

inline Number wrap(double x) { return Number(x); }
inline Number wrap(const Rational& x) { return Number(x); }

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Rational& x) { return std::fabs(x.convert_to<double>()); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x == 0; }

/// n when x == -n for an integer n >= 0.
inline std::optional<long> nonpositive_integer(double x) {
  if (!(x <= 0.0) || std::floor(x) != x || x < -1e15) return std::nullopt;
  return static_cast<long>(-x);
}

inline std::optional<long> nonpositive_integer(const Rational& x) {
  if (x > 0 || boost::multiprecision::denominator(x) != 1) return std::nullopt;
  const auto& num = boost::multiprecision::numerator(x);
  if (num < -1000000000000000LL) return std::nullopt;
  return -num.convert_to<long>();
}

template <class S>
S pochhammer(const S& x, std::size_t k) {
  S r(1);
  for (std::size_t j = 0; j < k; ++j) r *= x + S(static_cast<long>(j));
  return r;
}

template <class S>
constexpr Backend backend_of() {
  if constexpr (std::is_same_v<S, double>) {
    return Backend::float64;
  } else {
    return Backend::rational;
  }
}

}  // namespace f3sum::detail
