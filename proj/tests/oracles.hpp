#pragma once

// Brute-force reference implementations that share no code with the library
// kernels: every term is rebuilt from scratch.

#include <array>
#include <cmath>
#include <vector>

#include "f3sum/number.hpp"
#include "f3sum/params.hpp"

namespace oracle {

using f3sum::Family;
using f3sum::ParameterSet;
using f3sum::Rational;

inline long double poch(long double x, int k) {
  long double p = 1;
  for (int j = 0; j < k; ++j) p *= x + j;
  return p;
}

inline Rational poch(const Rational& x, int k) {
  Rational p = 1;
  for (int j = 0; j < k; ++j) p *= x + j;
  return p;
}

inline long double factorial(int k) {
  long double f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

// Index sum used by each family, written out independently of the library.
inline int index_sum(Family f, int m1, int m2, int m3) {
  switch (f) {
    case Family::a: case Family::e: return m1 + m2 + m3;
    case Family::b: case Family::g: return m1 + m2;
    case Family::bp: case Family::gp: return m2 + m3;
    case Family::bpp: case Family::gpp: return m3 + m1;
    case Family::c: case Family::h: return m1;
    case Family::cp: case Family::hp: return m2;
    case Family::cpp: case Family::hpp: return m3;
  }
  return 0;
}

inline bool numerator(Family f) {
  switch (f) {
    case Family::a: case Family::b: case Family::bp: case Family::bpp:
    case Family::c: case Family::cp: case Family::cpp: return true;
    default: return false;
  }
}

inline constexpr std::array<Family, 14> kFamilies = {
    Family::a, Family::b, Family::bp, Family::bpp, Family::c, Family::cp, Family::cpp,
    Family::e, Family::g, Family::gp, Family::gpp, Family::h, Family::hp, Family::hpp};

inline long double lambda(const ParameterSet& ps, int m1, int m2, int m3) {
  long double num = 1;
  long double den = 1;
  for (Family f : kFamilies) {
    const int k = index_sum(f, m1, m2, m3);
    for (const auto& v : ps[f]) {
      (numerator(f) ? num : den) *= poch(static_cast<long double>(v.to_double()), k);
    }
  }
  return num / den;
}

inline Rational lambda_exact(const ParameterSet& ps, int m1, int m2, int m3) {
  Rational num = 1;
  Rational den = 1;
  for (Family f : kFamilies) {
    const int k = index_sum(f, m1, m2, m3);
    for (const auto& v : ps[f]) (numerator(f) ? num : den) *= poch(v.rational(), k);
  }
  return num / den;
}

/// Direct triple loop over m1 + m2 + m3 <= degree.
inline long double f3(const ParameterSet& ps, std::array<double, 3> x, int degree) {
  long double total = 0;
  for (int m1 = 0; m1 <= degree; ++m1) {
    for (int m2 = 0; m1 + m2 <= degree; ++m2) {
      for (int m3 = 0; m1 + m2 + m3 <= degree; ++m3) {
        total += lambda(ps, m1, m2, m3) * std::pow(static_cast<long double>(x[0]), m1) *
                 std::pow(static_cast<long double>(x[1]), m2) *
                 std::pow(static_cast<long double>(x[2]), m3) /
                 (factorial(m1) * factorial(m2) * factorial(m3));
      }
    }
  }
  return total;
}

inline Rational power(const Rational& x, int k) {
  Rational p = 1;
  for (int j = 0; j < k; ++j) p *= x;
  return p;
}

inline Rational f3_exact(const ParameterSet& ps, const std::array<Rational, 3>& x, int degree) {
  Rational total = 0;
  for (int m1 = 0; m1 <= degree; ++m1) {
    for (int m2 = 0; m1 + m2 <= degree; ++m2) {
      for (int m3 = 0; m1 + m2 + m3 <= degree; ++m3) {
        Rational fact = poch(Rational(1), m1) * poch(Rational(1), m2) * poch(Rational(1), m3);
        total += lambda_exact(ps, m1, m2, m3) * power(x[0], m1) * power(x[1], m2) *
                 power(x[2], m3) / fact;
      }
    }
  }
  return total;
}

/// Lauricella F_A in three variables from its classical definition.
inline long double fa3(double a, std::array<double, 3> b, std::array<double, 3> c,
                       std::array<double, 3> x, int degree) {
  long double total = 0;
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) {
      for (int k = 0; i + j + k <= degree; ++k) {
        const int m[3] = {i, j, k};
        long double term = poch(a, i + j + k);
        for (int v = 0; v < 3; ++v) {
          term *= poch(b[v], m[v]) / poch(c[v], m[v]) * std::pow(static_cast<long double>(x[v]), m[v]) /
                  factorial(m[v]);
        }
        total += term;
      }
    }
  }
  return total;
}

/// Lauricella F_D in three variables from its classical definition.
inline long double fd3(double a, std::array<double, 3> b, double c, std::array<double, 3> x,
                       int degree) {
  long double total = 0;
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; i + j <= degree; ++j) {
      for (int k = 0; i + j + k <= degree; ++k) {
        const int m[3] = {i, j, k};
        long double term = poch(a, i + j + k) / poch(c, i + j + k);
        for (int v = 0; v < 3; ++v) {
          term *= poch(b[v], m[v]) * std::pow(static_cast<long double>(x[v]), m[v]) / factorial(m[v]);
        }
        total += term;
      }
    }
  }
  return total;
}

/// H_A from its defining coefficient
/// (a)_{m3+m1} (b1)_{m1+m2} (b2)_{m2+m3} / ((c1)_{m1} (c2)_{m2+m3}).
inline long double ha(double a, double b1, double b2, double c1, double c2, std::array<double, 3> x,
                      int degree) {
  long double total = 0;
  for (int m1 = 0; m1 <= degree; ++m1) {
    for (int m2 = 0; m1 + m2 <= degree; ++m2) {
      for (int m3 = 0; m1 + m2 + m3 <= degree; ++m3) {
        long double term = poch(a, m3 + m1) * poch(b1, m1 + m2) * poch(b2, m2 + m3) /
                           (poch(c1, m1) * poch(c2, m2 + m3));
        term *= std::pow(static_cast<long double>(x[0]), m1) *
                std::pow(static_cast<long double>(x[1]), m2) *
                std::pow(static_cast<long double>(x[2]), m3) /
                (factorial(m1) * factorial(m2) * factorial(m3));
        total += term;
      }
    }
  }
  return total;
}

/// Single-variable series, summed term by term from scratch.
inline Rational pfq_exact(const std::vector<Rational>& num, const std::vector<Rational>& den,
                          const Rational& z, int terms) {
  Rational total = 0;
  for (int k = 0; k < terms; ++k) {
    Rational t = power(z, k) / poch(Rational(1), k);
    for (const auto& a : num) t *= poch(a, k);
    for (const auto& b : den) t /= poch(b, k);
    total += t;
  }
  return total;
}

inline long double pfq(const std::vector<double>& num, const std::vector<double>& den, double z,
                       int terms) {
  long double total = 0;
  for (int k = 0; k < terms; ++k) {
    long double t = std::pow(static_cast<long double>(z), k) / factorial(k);
    for (double a : num) t *= poch(a, k);
    for (double b : den) t /= poch(b, k);
    total += t;
  }
  return total;
}

inline double rel(long double got, long double want) {
  return static_cast<double>(std::fabs(got - want) / std::max(std::fabs(want), 1e-300L));
}

}  // namespace oracle
