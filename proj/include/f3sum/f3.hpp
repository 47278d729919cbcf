#pragma once

#include <cstddef>
#include <span>

#include "f3sum/number.hpp"
#include "f3sum/params.hpp"
#include "f3sum/series.hpp"

namespace f3sum {

struct ArgumentTriple {
  Number x1;
  Number x2;
  Number x3;

  Backend backend() const;  ///< throws BackendMismatch if the three disagree
};

/// Coefficient of x1^m1 x2^m2 x3^m3 / (m1! m2! m3!) in the triple series: the
/// ratio of numerator to denominator Pochhammer products, each family running
/// over its own index sum. Computed directly, not incrementally.
///
/// Throws DenominatorPole if a denominator product vanishes at (m1, m2, m3).
Number lambda_coeff(const ParameterSet& ps, std::size_t m1, std::size_t m2, std::size_t m3);

/// Sums the triple series shell by shell (m1+m2+m3 = 0, 1, 2, ...), visiting
/// each shell in lexicographic order with m1 major and m3 minor.
///
/// Terms are built incrementally from the previous shell by one Pochhammer
/// ratio per step. Lattice regions killed by a non-positive integer numerator
/// (or a zero argument) are skipped; when a whole shell is empty the result is
/// exact and `terminated_exactly` is set. Throws DenominatorPole when a reached
/// term has a vanishing denominator. Non-convergence is reported by flag.
EvaluationResult eval_f3(const ParameterSet& ps, const ArgumentTriple& args,
                         const TruncationPolicy& policy);

/// deficit^budget * F(ps; scaled_x1 / deficit, x2, x3), evaluated without
/// dividing by `deficit`, which may therefore be zero.
///
/// Requires the series to terminate in m1 at or below `budget` through a
/// numerator entry; throws DomainError otherwise.
EvaluationResult eval_f3_homogeneous(const ParameterSet& ps, const Number& scaled_x1,
                                     const Number& deficit, std::size_t budget,
                                     const Number& x2, const Number& x3,
                                     const TruncationPolicy& policy);

/// Generalized hypergeometric series sum_k prod (num)_k / prod (den)_k z^k / k!.
/// Terminates exactly when a numerator is a non-positive integer.
EvaluationResult eval_pfq(std::span<const Number> numerators, std::span<const Number> denominators,
                          const Number& z, const TruncationPolicy& policy);

/// |lhs - rhs| / max(|rhs|, 1e-300); exactly zero when the values are equal.
double relative_residual(const Number& lhs, const Number& rhs);

}  // namespace f3sum
