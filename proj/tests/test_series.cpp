#include <doctest.h>

#include <cmath>

#include "f3sum/lemmas.hpp"
#include "f3sum/series.hpp"
#include "helpers.hpp"

using namespace f3sum;
using testing_support::D;
using testing_support::R;

TEST_CASE("pochhammer values") {
  CHECK(pochhammer(R(3), 4) == R(360));
  CHECK(pochhammer(R(7, 3), 0) == R(1));
  CHECK(pochhammer(D(2.5), 0).float64() == 1.0);
  CHECK(pochhammer(R(-2), 4) == R(0));
  CHECK(pochhammer(R(1, 2), 3) == R(15, 8));
}

TEST_CASE("pochhammer products") {
  const std::vector<Number> none;
  CHECK(pochhammer_product(none, 7).float64() == 1.0);
  CHECK(pochhammer_product(none, 7, Backend::rational) == R(1));
  const std::vector<Number> two = {R(2), R(3)};
  CHECK(pochhammer_product(two, 2) == R(72));
  const std::vector<Number> half = {D(0.5)};
  CHECK(pochhammer_product(half, 2).float64() == 0.75);
}

TEST_CASE("pochhammer splits as (x)_{j+k} = (x)_j (x+j)_k") {
  for (long p = -7; p <= 7; ++p) {
    const Number x = R(p, 3);
    for (std::size_t j = 0; j <= 5; ++j) {
      for (std::size_t k = 0; k <= 5; ++k) {
        const Number shifted = x + Number::integer(static_cast<long long>(j), Backend::rational);
        CHECK(pochhammer(x, j + k) == pochhammer(x, j) * pochhammer(shifted, k));
      }
    }
  }
}

TEST_CASE("adaptive sum of zeros converges to zero") {
  auto r = adaptive_sum([](std::size_t) { return D(0.0); }, {});
  CHECK(r.converged);
  CHECK(r.value.float64() == 0.0);
}

TEST_CASE("adaptive sum of a geometric series") {
  TruncationPolicy policy{1e-12, 200, 3};
  auto r = adaptive_sum([](std::size_t k) { return D(std::pow(0.5, static_cast<double>(k))); },
                        policy);
  CHECK(r.converged);
  CHECK(std::fabs(r.value.float64() - 2.0) < 1e-12);
}

TEST_CASE("adaptive sum matches the binomial closed form") {
  TruncationPolicy policy{1e-15, 200, 3};
  auto r = adaptive_sum(
      [](std::size_t k) {
        return pochhammer(D(2.0), k) * D(std::pow(0.2, static_cast<double>(k)) / std::tgamma(k + 1.0));
      },
      policy);
  const double closed = binomial_1f0(D(2.0), D(0.2)).float64();
  CHECK(closed == doctest::Approx(1.5625).epsilon(1e-15));
  CHECK(std::fabs(r.value.float64() - closed) < 1e-14);
}

TEST_CASE("adaptive sum flags the cap instead of throwing") {
  TruncationPolicy policy{1e-15, 10, 3};
  auto r = adaptive_sum([](std::size_t) { return D(1.0); }, policy);
  CHECK_FALSE(r.converged);
  CHECK(r.shells_used == 11);
  CHECK_THROWS_AS(require_converged(r, "constant series"), NotConverged);
}

TEST_CASE("truncation policy validation") {
  CHECK_THROWS_AS((TruncationPolicy{0.0, 10, 3}).validate(), DomainError);
  CHECK_THROWS_AS((TruncationPolicy{1e-12, 0, 3}).validate(), DomainError);
  CHECK_THROWS_AS((TruncationPolicy{1e-12, 10, 0}).validate(), DomainError);
  CHECK_NOTHROW((TruncationPolicy{}).validate());
}
