#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "f3sum/errors.hpp"

namespace f3sum {

using Rational = boost::multiprecision::mpq_rational;

enum class Backend : std::uint8_t { float64, rational };

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view text);

/// A scalar living in exactly one backend: IEEE binary64 or an exact rational.
///
/// Arithmetic never converts implicitly. Combining a float64 with a rational
/// throws BackendMismatch; use convert() when a change of backend is intended.
class Number {
 public:
  Number() : value_(0.0) {}
  explicit Number(double v) : value_(v) {}
  explicit Number(Rational v) : value_(std::move(v)) {}

  static Number integer(long long v, Backend backend);
  static Number zero(Backend backend) { return integer(0, backend); }
  static Number one(Backend backend) { return integer(1, backend); }

  /// Parses "p/q", integers, and decimal/scientific literals. Decimal text is
  /// read exactly in the rational backend ("0.05" is 1/20).
  static Number parse(std::string_view text, Backend backend);

  Backend backend() const {
    return std::holds_alternative<double>(value_) ? Backend::float64 : Backend::rational;
  }
  bool is_float() const { return backend() == Backend::float64; }
  bool is_rational() const { return backend() == Backend::rational; }

  double float64() const;
  const Rational& rational() const;

  /// Value as a double regardless of backend (lossy for rationals).
  double to_double() const;
  double magnitude() const;

  bool is_zero() const;
  bool is_integer() const;
  /// n when the value is exactly -n for a non-negative integer n.
  std::optional<long long> nonpositive_integer() const;
  std::optional<long long> as_integer() const;

  Number abs() const;
  std::string to_string() const;

  Number operator-() const;
  Number& operator+=(const Number& rhs);
  Number& operator-=(const Number& rhs);
  Number& operator*=(const Number& rhs);
  Number& operator/=(const Number& rhs);

  friend Number operator+(Number lhs, const Number& rhs) { return lhs += rhs; }
  friend Number operator-(Number lhs, const Number& rhs) { return lhs -= rhs; }
  friend Number operator*(Number lhs, const Number& rhs) { return lhs *= rhs; }
  friend Number operator/(Number lhs, const Number& rhs) { return lhs /= rhs; }

  /// Exact comparison within one backend; mixing backends throws.
  friend bool operator==(const Number& lhs, const Number& rhs);
  friend bool operator<(const Number& lhs, const Number& rhs);

 private:
  std::variant<double, Rational> value_;
};

/// Explicit change of backend. float64 -> rational is exact (binary value).
Number convert(const Number& x, Backend backend);

/// base^n for an integer exponent; negative n inverts (DomainError on 0^-n).
Number pow_int(const Number& base, long long n);

/// base^exponent. float64 uses std::pow; the rational backend requires an
/// integer exponent and throws DomainError otherwise.
Number power(const Number& base, const Number& exponent);

/// Shortest round-trip decimal rendering of a double.
std::string format_double(double v);

/// Exact rational reading of a decimal literal such as "-1.25e-3" or "7/3".
Rational parse_rational(std::string_view text);

}  // namespace f3sum
