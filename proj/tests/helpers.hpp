#pragma once

#include "f3sum/number.hpp"

namespace testing_support {

inline f3sum::Number R(long num, long den = 1) { return f3sum::Number(f3sum::Rational(num, den)); }
inline f3sum::Number D(double v) { return f3sum::Number(v); }

}  // namespace testing_support
