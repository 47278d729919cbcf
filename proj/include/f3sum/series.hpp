#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>

#include "f3sum/number.hpp"

namespace f3sum {

/// Stop rule shared by every truncated summation in the library.
///
/// A series stops after `stall_window` consecutive increments (terms or whole
/// shells) satisfy |increment| < tol * max(|partial sum|, 1), or when the index
/// reaches `max_total_degree`, in which case the result is flagged as not
/// converged.
struct TruncationPolicy {
  double tol = 1e-15;
  std::size_t max_total_degree = 100;
  std::size_t stall_window = 3;

  /// Throws DomainError unless tol > 0, max_total_degree >= 1, stall_window >= 1.
  void validate() const;
};

struct EvaluationResult {
  Number value;
  std::size_t shells_used = 0;
  double last_shell_magnitude = 0.0;
  bool converged = false;
  /// Every remaining term is exactly zero (numerator termination); implies converged.
  bool terminated_exactly = false;
};

/// Throws NotConverged when `result` did not meet its stop rule.
void require_converged(const EvaluationResult& result, std::string_view what);

/// Tracks the consecutive-small-increment condition of a TruncationPolicy.
class StallMonitor {
 public:
  explicit StallMonitor(const TruncationPolicy& policy) : policy_(policy) {}

  /// Feed one increment; returns true once the stop rule is met.
  bool observe(double increment_magnitude, double partial_magnitude) {
    const double scale = partial_magnitude > 1.0 ? partial_magnitude : 1.0;
    if (increment_magnitude < policy_.tol * scale) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    return small_run_ >= policy_.stall_window;
  }

 private:
  TruncationPolicy policy_;
  std::size_t small_run_ = 0;
};

/// Rising factorial x(x+1)...(x+k-1); 1 for k = 0. Exact in the rational backend.
Number pochhammer(const Number& x, std::size_t k);

/// Product of pochhammer(x, k) over xs; 1 (in `empty_backend`) for an empty list.
Number pochhammer_product(std::span<const Number> xs, std::size_t k,
                          Backend empty_backend = Backend::float64);

/// Sums term(0), term(1), ... in increasing order under `policy`.
///
/// The backend is taken from term(0). Summation order is fixed, so the result
/// is reproducible bit for bit.
EvaluationResult adaptive_sum(const std::function<Number(std::size_t)>& term,
                              const TruncationPolicy& policy);

}  // namespace f3sum
