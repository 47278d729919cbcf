#include "f3sum/random_instances.hpp"

#include <array>
#include <limits>

namespace f3sum {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Number ratio(long long num, long long den, Backend backend) {
  if (backend == Backend::rational) return Number(Rational(num, den));
  return Number(static_cast<double>(num) / static_cast<double>(den));
}

std::size_t random_length(Rng& rng) {
  const double u = rng.uniform();
  if (u < 0.55) return 0;
  if (u < 0.85) return 1;
  return 2;
}

int entries_involving(const ParameterSet& ps, int var, bool numerator) {
  int count = 0;
  for (Family f : kAllFamilies) {
    if (is_numerator(f) == numerator && combo_involves(combo_of(f), var)) {
      count += static_cast<int>(ps.size(f));
    }
  }
  return count;
}

Number random_lemma_value(Rng& rng) {
  return Number(Rational(rng.integer(-60, 60), rng.integer(1, 12)));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view group, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ fnv1a(group) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

long long Rng::integer(long long lo, long long hi) {
  if (hi < lo) throw DomainError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t v = 0;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<long long>(v % span);
}

Number random_parameter_value(Rng& rng, Backend backend) {
  long long k = 0;
  do {
    k = rng.integer(20, 160);
  } while (k == 64 || k == 128);
  return ratio(k, 64, backend);
}

ParameterSet random_parameter_set(Rng& rng, Backend backend, std::optional<Family> required) {
  ParameterSet ps;
  for (Family f : kAllFamilies) {
    std::size_t len = random_length(rng);
    if (required && *required == f && len == 0) len = 1;
    std::vector<Number> values;
    for (std::size_t j = 0; j < len; ++j) values.push_back(random_parameter_value(rng, backend));
    ps = ps.with(f, std::move(values));
  }
  for (int var = 0; var < 3; ++var) {
    while (entries_involving(ps, var, true) > entries_involving(ps, var, false)) {
      std::vector<Family> open;
      for (Family f : kAllFamilies) {
        if (!is_numerator(f) && combo_involves(combo_of(f), var) && ps.size(f) < 2) {
          open.push_back(f);
        }
      }
      ps = push_entry(ps, rng.pick(open), random_parameter_value(rng, backend));
    }
  }
  return ps;
}

ArgumentTriple random_arguments(Rng& rng, Backend backend) {
  auto draw = [&] { return ratio(rng.integer(-51, 51), 1024, backend); };
  Number x1 = draw();
  Number x2 = draw();
  Number x3 = draw();
  return {x1, x2, x3};
}

Number random_t(Rng& rng, Backend backend) { return ratio(rng.integer(-204, 204), 1024, backend); }

Number random_free_scalar(Rng& rng, Backend backend) {
  static const std::array<std::pair<long long, long long>, 3> kChoices = {
      {{3, 10}, {7, 10}, {7, 5}}};
  const auto& [num, den] = kChoices[static_cast<std::size_t>(rng.integer(0, 2))];
  return ratio(num, den, backend);
}

IdentityInstance random_identity_instance(IdentityId id, std::uint64_t seed, std::size_t index,
                                          Backend backend) {
  const IdentityDef& def = identity_definition(id);
  Rng rng(derive_seed(seed, def.name, index));
  IdentityInstance inst{.id = id, .ps = random_parameter_set(rng, backend, def.family)};
  if (def.family) {
    inst.i = static_cast<std::size_t>(
        rng.integer(1, static_cast<long long>(inst.ps.size(*def.family))));
  }
  if (def.scalars & kNeedsT) inst.scalars.t = random_t(rng, backend);
  if (def.scalars & kNeedsR) inst.scalars.r = random_free_scalar(rng, backend);
  if (def.scalars & kNeedsD) inst.scalars.d = random_free_scalar(rng, backend);
  inst.args = random_arguments(rng, backend);
  return inst;
}

IdentityInstance collapsed(const IdentityInstance& inst) {
  IdentityInstance out = inst;
  const Number zero = Number::zero(inst.backend());
  if (out.scalars.t) out.scalars.t = zero;
  if (out.scalars.r) out.scalars.r = zero;
  if (out.scalars.d) out.scalars.d = zero;
  return out;
}

SpecialInstance random_special_instance(SpecialCaseId id, std::uint64_t seed, std::size_t index,
                                        Backend backend) {
  Rng rng(derive_seed(seed, special_name(id), index));
  SpecialInstance inst{.id = id, .values = {}, .t = Number::zero(backend), .args = {}};
  for (std::size_t j = 0; j < special_arity(id); ++j) {
    inst.values.push_back(random_parameter_value(rng, backend));
  }
  inst.t = random_t(rng, backend);
  inst.args = random_arguments(rng, backend);
  return inst;
}

LemmaInstance random_lemma_instance(LemmaId id, std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, lemma_name(id), index));
  const TruncationPolicy exact{1e-15, 64, 1};
  for (;;) {
    LemmaInstance inst{.id = id, .n = static_cast<std::size_t>(rng.integer(0, 15)), .params = {}};
    for (std::size_t j = 0; j < lemma_arity(id); ++j) inst.params.push_back(random_lemma_value(rng));
    try {
      lemma_closed_form(id, inst.n, inst.params);
      PfqSeries s = lemma_series(id, inst.n, inst.params);
      // A denominator -m with m < n is a pole even when the sum stops first.
      bool pole = false;
      for (const Number& den : s.denominators) {
        auto m = den.nonpositive_integer();
        pole = pole || (m && static_cast<std::size_t>(*m) < inst.n);
      }
      if (pole) continue;
      eval_pfq(s.numerators, s.denominators, s.z, exact);
      return inst;
    } catch (const Error&) {
      // pole in this draw
    }
  }
}

std::pair<ParameterSet, ArgumentTriple> random_series_instance(std::uint64_t seed,
                                                               std::size_t index,
                                                               Backend backend) {
  Rng rng(derive_seed(seed, "series", index));
  ParameterSet ps = random_parameter_set(rng, backend);
  return {ps, random_arguments(rng, backend)};
}

IdentityInstance random_terminating_t9c(std::uint64_t seed, std::size_t index) {
  constexpr Backend kExact = Backend::rational;
  Rng rng(derive_seed(seed, "T9c-terminating", index));
  ParameterSet ps = random_parameter_set(rng, kExact);
  ps = ps.with(Family::c, {Number::integer(-rng.integer(1, 5), kExact)});
  ps = ps.with(Family::cp, {Number::integer(-rng.integer(0, 3), kExact)});
  ps = ps.with(Family::cpp, {Number::integer(-rng.integer(0, 3), kExact)});
  IdentityInstance inst{.id = IdentityId::T9c, .ps = ps, .i = 1};
  inst.scalars.t = ratio(rng.integer(-12, 12), 64, kExact);
  Number x1 = ratio(rng.integer(-8, 8), 32, kExact);
  Number x2 = ratio(rng.integer(-8, 8), 32, kExact);
  Number x3 = ratio(rng.integer(-8, 8), 32, kExact);
  inst.args = {x1, x2, x3};
  return inst;
}

}  // namespace f3sum
