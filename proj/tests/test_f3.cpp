#include <doctest.h>

#include <cmath>

#include "f3sum/f3.hpp"
#include "f3sum/random_instances.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace f3sum;
using testing_support::D;
using testing_support::R;

namespace {

ArgumentTriple args3(double x1, double x2, double x3) { return {D(x1), D(x2), D(x3)}; }
ArgumentTriple args3(Number x1, Number x2, Number x3) { return {x1, x2, x3}; }

std::array<double, 3> doubles(const ArgumentTriple& a) {
  return {a.x1.to_double(), a.x2.to_double(), a.x3.to_double()};
}

// Relabels variables 1 and 2.
ParameterSet swap_12(const ParameterSet& ps) {
  const std::array<std::pair<Family, Family>, 14> map = {{
      {Family::a, Family::a},     {Family::b, Family::b},     {Family::bp, Family::bpp},
      {Family::bpp, Family::bp},  {Family::c, Family::cp},    {Family::cp, Family::c},
      {Family::cpp, Family::cpp}, {Family::e, Family::e},     {Family::g, Family::g},
      {Family::gp, Family::gpp},  {Family::gpp, Family::gp},  {Family::h, Family::hp},
      {Family::hp, Family::h},    {Family::hpp, Family::hpp},
  }};
  ParameterSet out;
  for (const auto& [from, to] : map) out = out.with(to, ps[from]);
  return out;
}

}  // namespace

TEST_CASE("lambda coefficient values") {
  CHECK(lambda_coeff(ParameterSet{}, 3, 1, 4) == Number(1.0));
  CHECK(lambda_coeff(ParameterSet{}.with(Family::a, {R(1)}), 1, 1, 0) == R(2));
  CHECK(lambda_coeff(ParameterSet{}.with(Family::a, {R(2)}).with(Family::e, {R(3)}), 1, 0, 1) ==
        R(1, 2));
  CHECK_THROWS_AS(lambda_coeff(ParameterSet{}.with(Family::h, {R(-1)}), 2, 0, 0), DenominatorPole);
}

TEST_CASE("lambda coefficient agrees with the oracle on random sets") {
  for (std::size_t n = 0; n < 5; ++n) {
    auto [ps, args] = random_series_instance(7, n, Backend::rational);
    for (int m1 = 0; m1 <= 3; ++m1) {
      for (int m2 = 0; m2 <= 3; ++m2) {
        for (int m3 = 0; m3 <= 3; ++m3) {
          CHECK(lambda_coeff(ps, m1, m2, m3).rational() == oracle::lambda_exact(ps, m1, m2, m3));
        }
      }
    }
  }
}

TEST_CASE("eval_f3 at the origin is one") {
  auto r = eval_f3(ParameterSet{}.with(Family::a, {D(1.5)}), args3(0, 0, 0), {});
  CHECK(r.value.float64() == 1.0);
  CHECK(r.terminated_exactly);
}

TEST_CASE("eval_f3 of the a-only series is 1/(1 - x1 - x2 - x3)") {
  auto r = eval_f3(ParameterSet{}.with(Family::a, {D(1.0)}), args3(0.1, 0.1, 0.1), {});
  CHECK(r.converged);
  CHECK(r.value.float64() == doctest::Approx(1.4285714286).epsilon(1e-10));
  CHECK(oracle::rel(r.value.float64(), 1.0L / 0.7L) < 1e-14);
  const long double direct =
      oracle::f3(ParameterSet{}.with(Family::a, {D(1.0)}), {0.1, 0.1, 0.1}, 60);
  CHECK(oracle::rel(r.value.float64(), direct) < 1e-13);
}

TEST_CASE("eval_f3 terminates exactly on a non-positive integer numerator") {
  const ParameterSet ps = ParameterSet{}.with(Family::c, {R(-2)});
  auto r = eval_f3(ps, args3(R(1, 2), R(0), R(0)), {});
  CHECK(r.terminated_exactly);
  CHECK(r.value == R(1, 4));
  auto f = eval_f3(ParameterSet{}.with(Family::c, {D(-2.0)}), args3(0.5, 0, 0), {});
  CHECK(f.terminated_exactly);
  CHECK(f.value.float64() == 0.25);
}

TEST_CASE("eval_f3 raises on a reached denominator pole") {
  CHECK_THROWS_AS(eval_f3(ParameterSet{}.with(Family::h, {D(-2.0)}), args3(0.1, 0, 0), {}),
                  DenominatorPole);
  auto r = eval_f3(ParameterSet{}.with(Family::h, {D(-2.0)}).with(Family::c, {D(-2.0)}),
                   args3(0.1, 0.2, 0), {});
  CHECK(r.converged);
}

TEST_CASE("eval_f3 flags non-convergence at the shell cap") {
  auto r = eval_f3(ParameterSet{}.with(Family::a, {D(1.0)}), args3(0.3, 0.3, 0.3),
                   {1e-15, 12, 3});
  CHECK_FALSE(r.converged);
  CHECK(r.shells_used == 13);
}

TEST_CASE("eval_f3 rejects mixed backends") {
  CHECK_THROWS_AS(eval_f3(ParameterSet{}.with(Family::a, {R(1)}), args3(0.1, 0.1, 0.1), {}),
                  BackendMismatch);
  CHECK_THROWS_AS(eval_f3(ParameterSet{}, args3(D(0.1), R(1, 10), D(0.1)), {}), BackendMismatch);
}

TEST_CASE("eval_f3 matches the direct triple loop on random sets") {
  for (std::size_t n = 0; n < 10; ++n) {
    auto [ps, args] = random_series_instance(42, n, Backend::float64);
    auto r = eval_f3(ps, args, {1e-15, 100, 3});
    REQUIRE(r.converged);
    const long double direct = oracle::f3(ps, doubles(args), 40);
    CHECK(oracle::rel(r.value.float64(), direct) < 1e-12);
  }
}

TEST_CASE("float64 and rational backends agree on dyadic inputs") {
  const TruncationPolicy policy{1e-15, 22, 3};
  for (std::size_t n = 0; n < 4; ++n) {
    auto [pf, af] = random_series_instance(3, n, Backend::float64);
    auto [pr, ar] = random_series_instance(3, n, Backend::rational);
    for (Family f : kAllFamilies) {
      for (std::size_t i = 0; i < pf.size(f); ++i) {
        REQUIRE(convert(pf[f][i], Backend::rational) == pr[f][i]);
      }
    }
    const double vf = eval_f3(pf, af, policy).value.float64();
    const double vr = eval_f3(pr, ar, policy).value.to_double();
    CHECK(oracle::rel(vf, vr) < 1e-14);
  }
}

TEST_CASE("exact evaluation of a terminating series equals the exact oracle") {
  const ParameterSet ps = ParameterSet{}
                              .with(Family::a, {R(-4)})
                              .with(Family::b, {R(3, 7), R(-5, 2)})
                              .with(Family::cpp, {R(2, 3)})
                              .with(Family::e, {R(9, 4)})
                              .with(Family::gp, {R(-13, 3)})
                              .with(Family::hp, {R(1, 5)});
  const std::array<Rational, 3> x = {Rational(1, 3), Rational(-2, 5), Rational(3, 4)};
  auto r = eval_f3(ps, args3(Number(x[0]), Number(x[1]), Number(x[2])), {});
  CHECK(r.terminated_exactly);
  CHECK(r.value.rational() == oracle::f3_exact(ps, x, 4));
}

TEST_CASE("reordering entries within a family leaves the value unchanged") {
  const ParameterSet ps = ParameterSet{}
                              .with(Family::a, {R(1, 3), R(5, 4)})
                              .with(Family::g, {R(7, 2), R(2, 9)})
                              .with(Family::c, {R(-3)});
  const ParameterSet swapped = ps.with(Family::a, {R(5, 4), R(1, 3)}).with(Family::g, {R(2, 9), R(7, 2)});
  const ArgumentTriple x = args3(R(1, 8), R(1, 16), R(0));
  const TruncationPolicy policy{1e-15, 12, 3};
  CHECK(eval_f3(ps, x, policy).value == eval_f3(swapped, x, policy).value);
}

TEST_CASE("relabelling two variables is a symmetry") {
  for (std::size_t n = 0; n < 5; ++n) {
    auto [ps, args] = random_series_instance(11, n, Backend::float64);
    const double v = eval_f3(ps, args, {}).value.float64();
    const double w = eval_f3(swap_12(ps), args3(args.x2, args.x1, args.x3), {}).value.float64();
    CHECK(oracle::rel(v, w) < 1e-14);
  }
}

TEST_CASE("homogeneous evaluation matches the scaled series") {
  const ParameterSet ps =
      ParameterSet{}.with(Family::c, {D(-3.0)}).with(Family::a, {D(0.75)}).with(Family::hp, {D(1.5)});
  const double q = 0.04;
  const double s = 0.3;
  auto hom = eval_f3_homogeneous(ps, D(q), D(s), 5, D(0.02), D(-0.03), {});
  auto plain = eval_f3(ps, args3(q / s, 0.02, -0.03), {});
  CHECK(oracle::rel(hom.value.float64(), std::pow(s, 5) * plain.value.float64()) < 1e-14);
  auto zero = eval_f3_homogeneous(ps, D(q), D(0.0), 3, D(0.02), D(-0.03), {});
  auto tiny = eval_f3_homogeneous(ps, D(q), D(1e-9), 3, D(0.02), D(-0.03), {});
  CHECK(zero.converged);
  CHECK(oracle::rel(zero.value.float64(), tiny.value.float64()) < 1e-7);
  CHECK_THROWS_AS(eval_f3_homogeneous(ps, D(q), D(s), 2, D(0.0), D(0.0), {}), DomainError);
}

TEST_CASE("generalized hypergeometric series") {
  auto e = eval_pfq({}, {}, D(0.3), {});
  CHECK(oracle::rel(e.value.float64(), std::exp(0.3L)) < 1e-15);
  const std::vector<Number> num = {R(-2), R(1)};
  const std::vector<Number> den = {R(3)};
  auto v = eval_pfq(num, den, R(1), {});
  CHECK(v.value == R(1, 2));
  CHECK(v.terminated_exactly);
  const std::vector<Number> two = {D(2.0)};
  CHECK(eval_pfq(two, {}, D(0.5), {1e-16, 200, 3}).value.float64() == doctest::Approx(4.0).epsilon(1e-14));
  const std::vector<Number> pole = {R(-1)};
  CHECK_THROWS_AS(eval_pfq({}, pole, R(1, 2), {}), DenominatorPole);
}

TEST_CASE("relative residual") {
  CHECK(relative_residual(R(1, 3), R(1, 3)) == 0.0);
  CHECK(relative_residual(D(1.0), D(2.0)) == 0.5);
  CHECK(relative_residual(D(1e-310), D(0.0)) > 0.0);
}
