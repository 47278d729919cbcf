#include <doctest.h>

#include "f3sum/params.hpp"
#include "helpers.hpp"

using namespace f3sum;
using testing_support::R;

namespace {

ParameterSet with_a(std::vector<Number> a) { return ParameterSet{}.with(Family::a, std::move(a)); }

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : kAllFamilies) CHECK(parse_family(family_name(f)) == f);
  CHECK(family_name(Family::bpp) == "bpp");
  CHECK_FALSE(parse_family("b''"));
}

TEST_CASE("index combinations per family") {
  CHECK(combo_value(combo_of(Family::a), 1, 2, 3) == 6);
  CHECK(combo_value(combo_of(Family::g), 1, 2, 3) == 3);
  CHECK(combo_value(combo_of(Family::bp), 1, 2, 3) == 5);
  CHECK(combo_value(combo_of(Family::gpp), 1, 2, 3) == 4);
  CHECK(combo_value(combo_of(Family::h), 1, 2, 3) == 1);
  CHECK(combo_value(combo_of(Family::cp), 1, 2, 3) == 2);
  CHECK(combo_value(combo_of(Family::hpp), 1, 2, 3) == 3);
  CHECK(is_numerator(Family::cpp));
  CHECK_FALSE(is_numerator(Family::e));
}

TEST_CASE("shift_family") {
  CHECK(shift_family(with_a({R(1), R(2)}), Family::a, 3) == with_a({R(4), R(5)}));
  const ParameterSet ps = with_a({R(1, 2)}).with(Family::h, {R(3)});
  CHECK(shift_family(ps, Family::h, 0) == ps);
  CHECK(shift_family(ParameterSet{}, Family::c, 5).size(Family::c) == 0);
}

TEST_CASE("shift_family composes additively") {
  const ParameterSet ps = with_a({R(1, 3), R(-2)}).with(Family::g, {R(5, 7)});
  for (long long j = -3; j <= 3; ++j) {
    for (long long k = -3; k <= 3; ++k) {
      CHECK(shift_family(shift_family(ps, Family::a, j), Family::a, k) ==
            shift_family(ps, Family::a, j + k));
    }
  }
}

TEST_CASE("shift_entry") {
  CHECK(shift_entry(with_a({R(1), R(2)}), {Family::a, 1}, 10) == with_a({R(11), R(2)}));
  CHECK(shift_entry(with_a({R(1)}), {Family::a, 1}, -1) == with_a({R(0)}));
  CHECK_THROWS_AS(shift_entry(with_a({R(1)}), {Family::a, 2}, 1), InvalidIndex);
  CHECK_THROWS_AS(shift_entry(with_a({R(1)}), {Family::a, 0}, 1), InvalidIndex);
}

TEST_CASE("drop_entry") {
  CHECK(drop_entry(with_a({R(1), R(2), R(3)}), {Family::a, 2}) == with_a({R(1), R(3)}));
  CHECK(drop_entry(with_a({R(7)}), {Family::a, 1}) == with_a({}));
  CHECK_THROWS_AS(drop_entry(with_a({}), {Family::a, 1}), InvalidIndex);
}

TEST_CASE("push_entry appends every time") {
  CHECK(push_entry(ParameterSet{}, Family::c, R(1, 2))[Family::c] == std::vector<Number>{R(1, 2)});
  const ParameterSet h2 = ParameterSet{}.with(Family::h, {R(2)});
  CHECK(push_entry(h2, Family::h, R(3))[Family::h] == std::vector<Number>{R(2), R(3)});
  CHECK(push_entry(push_entry(h2, Family::h, R(3)), Family::h, R(3)).size(Family::h) == 3);
}

TEST_CASE("denominator pole warnings") {
  auto warnings = validate(ParameterSet{}.with(Family::h, {R(-2)}));
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].message().rfind("DenominatorPole(h,1)", 0) == 0);
  CHECK(warnings[0].pole_order == 2);

  CHECK(validate(ParameterSet{}.with(Family::h, {R(-5)}).with(Family::c, {R(-2)})).empty());
  CHECK(validate(with_a({R(1), R(5, 2)}).with(Family::e, {R(3)})).empty());
  // Termination over m1 alone does not cover a pole over m1+m2+m3.
  CHECK(validate(ParameterSet{}.with(Family::e, {R(-3)}).with(Family::c, {R(-1)})).size() == 1);
  // (-2)_{m1} first vanishes at m1 = 3, after the numerator has stopped the series.
  CHECK(validate(ParameterSet{}.with(Family::h, {R(-2)}).with(Family::c, {R(-2)})).empty());
  CHECK(validate(ParameterSet{}.with(Family::h, {R(-2)}).with(Family::c, {R(-3)})).size() == 1);
}

TEST_CASE("parameter set backend") {
  CHECK_FALSE(ParameterSet{}.backend());
  CHECK(with_a({R(1)}).backend() == Backend::rational);
  CHECK_THROWS_AS(with_a({R(1), Number(0.5)}).backend(), BackendMismatch);
}
