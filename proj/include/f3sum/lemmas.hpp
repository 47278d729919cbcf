#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "f3sum/number.hpp"

namespace f3sum {

/// (1 - t)^{-a}, the sum of 1F0(a; -; t). Throws PoleAtOne at t = 1; the
/// rational backend needs an integer a (DomainError otherwise).
Number binomial_1f0(const Number& a, const Number& t);

/// 2F1(-n, a; c; 1) = (c - a)_n / (c)_n.
Number vandermonde_2f1(std::size_t n, const Number& a, const Number& c);

/// 3F2(-n, a, b; c, 1 + a + b - c - n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
Number saalschutz_3f2(std::size_t n, const Number& a, const Number& b, const Number& c);

/// 3F2(-n, a, 1 + a/2; a/2, b; 1) = (b - a - 1 - n) (b - a)_{n-1} / (b)_n,
/// where the n = 0 value is 1 (needs b - a - 1 != 0).
Number nearly_poised_3f2(std::size_t n, const Number& a, const Number& b);

/// 3F2(-n, a, b; 1 + a - b, 1 + 2b - n; 1)
///   = (a-2b)_n (1 + a/2 - b)_n (-b)_n / ((1+a-b)_n (a/2 - b)_n (-2b)_n).
Number twob_balanced_3f2(std::size_t n, const Number& a, const Number& b);

/// 4F3(-n, a, 1 + a/2, b; a/2, 1 + a - b, 1 + 2b - n; 1)
///   = (a-2b)_n (-b)_n / ((1+a-b)_n (-2b)_n).
Number watson_4f3(std::size_t n, const Number& a, const Number& b);

enum class LemmaId : std::uint8_t {
  binomial_1f0,
  vandermonde_2f1,
  saalschutz_3f2,
  nearly_poised_3f2,
  twob_balanced_3f2,
  watson_4f3,
};

inline constexpr std::array<LemmaId, 6> kAllLemmas = {
    LemmaId::binomial_1f0,      LemmaId::vandermonde_2f1,   LemmaId::saalschutz_3f2,
    LemmaId::nearly_poised_3f2, LemmaId::twob_balanced_3f2, LemmaId::watson_4f3};

std::string_view lemma_name(LemmaId id);
std::optional<LemmaId> parse_lemma(std::string_view name);

/// Number of free parameters besides n: binomial takes (t) with a = -n; the
/// others take (a, c), (a, b, c), (a, b), (a, b), (a, b).
std::size_t lemma_arity(LemmaId id);

/// The terminating series a lemma sums in closed form.
struct PfqSeries {
  std::vector<Number> numerators;
  std::vector<Number> denominators;
  Number z;
};

PfqSeries lemma_series(LemmaId id, std::size_t n, std::span<const Number> params);
Number lemma_closed_form(LemmaId id, std::size_t n, std::span<const Number> params);

}  // namespace f3sum
