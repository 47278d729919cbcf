#include "f3sum/number.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

namespace f3sum {

namespace {

using boost::multiprecision::mpz_int;

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

// mpz_int's string constructor reads a leading 0 as an octal prefix.
mpz_int decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return mpz_int{std::string(digits)};
}

mpz_int parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  mpz_int v = decimal(s);
  return negative ? mpz_int(-v) : v;
}

mpz_int pow10(long long e) {
  mpz_int r = 1;
  for (long long i = 0; i < e; ++i) r *= 10;
  return r;
}

[[noreturn]] void mismatch(const char* op) {
  throw BackendMismatch(std::string("mixed float64/rational operands in ") + op);
}

template <class F>
void binary(std::variant<double, Rational>& lhs, const std::variant<double, Rational>& rhs,
            const char* op, F&& f) {
  if (lhs.index() != rhs.index()) mismatch(op);
  if (auto* d = std::get_if<double>(&lhs)) {
    f(*d, std::get<double>(rhs));
  } else {
    f(std::get<Rational>(lhs), std::get<Rational>(rhs));
  }
}

std::optional<long long> to_long_long(const mpz_int& z) {
  static const mpz_int lo = std::numeric_limits<long long>::min();
  static const mpz_int hi = std::numeric_limits<long long>::max();
  if (z < lo || z > hi) return std::nullopt;
  return z.convert_to<long long>();
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::float64 ? "float64" : "rational";
}

Backend parse_backend(std::string_view text) {
  if (text == "float64" || text == "float") return Backend::float64;
  if (text == "rational" || text == "exact") return Backend::rational;
  throw ParseError("unknown backend '" + std::string(text) + "' (expected float64 or rational)");
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_int p = parse_integer(text.substr(0, slash));
    mpz_int q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }

  std::string_view s = text;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_text = s.substr(epos + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) {
      throw ParseError("bad exponent in '" + std::string(text) + "'");
    }
    s = s.substr(0, epos);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw ParseError("not a number: '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long long>(frac.size());
  } else {
    if (!all_digits(s)) throw ParseError("not a number: '" + std::string(text) + "'");
    digits = std::string(s);
  }
  if (exponent > 4000 || exponent < -4000) throw ParseError("exponent out of range");
  mpz_int mantissa = decimal(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(mpz_int(mantissa * pow10(exponent)), mpz_int(1));
  return Rational(mantissa, pow10(-exponent));
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

Number Number::integer(long long v, Backend backend) {
  if (backend == Backend::float64) return Number(static_cast<double>(v));
  return Number(Rational(v));
}

Number Number::parse(std::string_view text, Backend backend) {
  text = trim(text);
  if (backend == Backend::rational) return Number(parse_rational(text));
  if (text.find('/') != std::string_view::npos) {
    Rational q = parse_rational(text);
    const auto& num = boost::multiprecision::numerator(q);
    const auto& den = boost::multiprecision::denominator(q);
    const mpz_int limit{static_cast<long long>(kMaxExactInteger)};
    if (boost::multiprecision::abs(num) < limit && den < limit) {
      return Number(num.convert_to<double>() / den.convert_to<double>());
    }
    return Number(q.convert_to<double>());
  }
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    // from_chars rejects a leading '+'
    if (!text.empty() && text.front() == '+') return parse(text.substr(1), backend);
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return Number(v);
}

double Number::float64() const {
  if (auto* d = std::get_if<double>(&value_)) return *d;
  throw BackendMismatch("expected a float64 value, got a rational");
}

const Rational& Number::rational() const {
  if (auto* q = std::get_if<Rational>(&value_)) return *q;
  throw BackendMismatch("expected a rational value, got a float64");
}

double Number::to_double() const {
  if (auto* d = std::get_if<double>(&value_)) return *d;
  return std::get<Rational>(value_).convert_to<double>();
}

double Number::magnitude() const { return std::fabs(to_double()); }

bool Number::is_zero() const {
  if (auto* d = std::get_if<double>(&value_)) return *d == 0.0;
  return std::get<Rational>(value_) == 0;
}

bool Number::is_integer() const {
  if (auto* d = std::get_if<double>(&value_)) return std::isfinite(*d) && std::floor(*d) == *d;
  return boost::multiprecision::denominator(std::get<Rational>(value_)) == 1;
}

std::optional<long long> Number::as_integer() const {
  if (!is_integer()) return std::nullopt;
  if (auto* d = std::get_if<double>(&value_)) {
    if (std::fabs(*d) >= kMaxExactInteger) return std::nullopt;
    return static_cast<long long>(*d);
  }
  return to_long_long(boost::multiprecision::numerator(std::get<Rational>(value_)));
}

std::optional<long long> Number::nonpositive_integer() const {
  auto v = as_integer();
  if (!v || *v > 0) return std::nullopt;
  return -*v;
}

Number Number::abs() const {
  if (auto* d = std::get_if<double>(&value_)) return Number(std::fabs(*d));
  return Number(Rational(boost::multiprecision::abs(std::get<Rational>(value_))));
}

std::string Number::to_string() const {
  if (auto* d = std::get_if<double>(&value_)) return format_double(*d);
  const Rational& q = std::get<Rational>(value_);
  const auto& den = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

Number Number::operator-() const {
  if (auto* d = std::get_if<double>(&value_)) return Number(-*d);
  return Number(Rational(-std::get<Rational>(value_)));
}

Number& Number::operator+=(const Number& rhs) {
  binary(value_, rhs.value_, "+", [](auto& a, const auto& b) { a += b; });
  return *this;
}

Number& Number::operator-=(const Number& rhs) {
  binary(value_, rhs.value_, "-", [](auto& a, const auto& b) { a -= b; });
  return *this;
}

Number& Number::operator*=(const Number& rhs) {
  binary(value_, rhs.value_, "*", [](auto& a, const auto& b) { a *= b; });
  return *this;
}

Number& Number::operator/=(const Number& rhs) {
  if (is_rational() && rhs.is_rational() && rhs.is_zero()) {
    throw DomainError("rational division by zero");
  }
  binary(value_, rhs.value_, "/", [](auto& a, const auto& b) { a /= b; });
  return *this;
}

bool operator==(const Number& lhs, const Number& rhs) {
  if (lhs.value_.index() != rhs.value_.index()) mismatch("==");
  return lhs.value_ == rhs.value_;
}

bool operator<(const Number& lhs, const Number& rhs) {
  if (lhs.value_.index() != rhs.value_.index()) mismatch("<");
  return lhs.value_ < rhs.value_;
}

Number convert(const Number& x, Backend backend) {
  if (x.backend() == backend) return x;
  if (backend == Backend::float64) return Number(x.to_double());
  double d = x.float64();
  if (!std::isfinite(d)) throw DomainError("cannot convert a non-finite double to rational");
  return Number(Rational(d));
}

Number pow_int(const Number& base, long long n) {
  if (n < 0) {
    if (base.is_zero()) throw DomainError("zero raised to a negative power");
    return Number::one(base.backend()) / pow_int(base, -n);
  }
  Number result = Number::one(base.backend());
  Number b = base;
  auto e = static_cast<unsigned long long>(n);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

Number power(const Number& base, const Number& exponent) {
  if (base.backend() != exponent.backend()) mismatch("power");
  if (base.is_float()) return Number(std::pow(base.float64(), exponent.float64()));
  auto n = exponent.as_integer();
  if (!n) {
    throw DomainError("rational backend needs an integer exponent, got " + exponent.to_string());
  }
  return pow_int(base, *n);
}

}  // namespace f3sum
