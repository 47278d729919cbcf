#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "f3sum/identities.hpp"
#include "f3sum/json_io.hpp"
#include "f3sum/lemmas.hpp"
#include "f3sum/special.hpp"

namespace f3sum {

/// Seed for instance `index` of `group`, independent of generation order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view group, std::uint64_t index);

/// mt19937_64 with portable integer and real draws (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [lo, hi], inclusive.
  long long integer(long long lo, long long hi);
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<long long>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// Parameter values k/64 in [0.3, 2.5], never 1 or 2. The value is identical
/// in both backends.
Number random_parameter_value(Rng& rng, Backend backend);

/// Families of length 0..2 holding random_parameter_value entries. Every
/// variable gets at least as many denominator as numerator entries, so the
/// series converges for all small arguments. `required` is made non-empty.
ParameterSet random_parameter_set(Rng& rng, Backend backend,
                                  std::optional<Family> required = std::nullopt);

/// Arguments j/1024 with |j| <= 51, so |x_i| <= 0.05.
ArgumentTriple random_arguments(Rng& rng, Backend backend);

/// t = j/1024 with |j| <= 204, so |t| <= 0.2.
Number random_t(Rng& rng, Backend backend);

/// One of 3/10, 7/10, 7/5.
Number random_free_scalar(Rng& rng, Backend backend);

IdentityInstance random_identity_instance(IdentityId id, std::uint64_t seed, std::size_t index,
                                          Backend backend);

/// The same instance with every free scalar set to zero.
IdentityInstance collapsed(const IdentityInstance& inst);

SpecialInstance random_special_instance(SpecialCaseId id, std::uint64_t seed, std::size_t index,
                                        Backend backend);

struct LemmaInstance {
  LemmaId id;
  std::size_t n;
  std::vector<Number> params;
};

/// Rational tuples p/q (|p| <= 60, 1 <= q <= 12) and n in 0..15, redrawn until
/// both the closed form and the terminating series are free of poles.
LemmaInstance random_lemma_instance(LemmaId id, std::uint64_t seed, std::size_t index);

/// Parameters for the brute-force comparison: random_parameter_set with no
/// required family, plus arguments as in random_arguments.
std::pair<ParameterSet, ArgumentTriple> random_series_instance(std::uint64_t seed,
                                                               std::size_t index,
                                                               Backend backend);

/// Exact T9c instance where every series terminates: c = [-N] selects the
/// outer length, and c', c'' hold non-positive integers.
IdentityInstance random_terminating_t9c(std::uint64_t seed, std::size_t index);

}  // namespace f3sum
