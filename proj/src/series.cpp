#include "f3sum/series.hpp"

#include <string>

namespace f3sum {

void TruncationPolicy::validate() const {
  if (!(tol > 0.0)) throw DomainError("truncation tol must be > 0");
  if (max_total_degree < 1) throw DomainError("max_total_degree must be >= 1");
  if (stall_window < 1) throw DomainError("stall_window must be >= 1");
}

void require_converged(const EvaluationResult& result, std::string_view what) {
  if (!result.converged) {
    throw NotConverged(std::string(what) + ": series did not converge within " +
                       std::to_string(result.shells_used) + " shells (last shell magnitude " +
                       format_double(result.last_shell_magnitude) + ")");
  }
}

Number pochhammer(const Number& x, std::size_t k) {
  Number r = Number::one(x.backend());
  for (std::size_t j = 0; j < k; ++j) {
    r *= x + Number::integer(static_cast<long long>(j), x.backend());
  }
  return r;
}

Number pochhammer_product(std::span<const Number> xs, std::size_t k, Backend empty_backend) {
  if (xs.empty()) return Number::one(empty_backend);
  Number r = Number::one(xs.front().backend());
  for (const Number& x : xs) r *= pochhammer(x, k);
  return r;
}

EvaluationResult adaptive_sum(const std::function<Number(std::size_t)>& term,
                              const TruncationPolicy& policy) {
  policy.validate();
  EvaluationResult result;
  StallMonitor monitor(policy);
  for (std::size_t k = 0; k <= policy.max_total_degree; ++k) {
    Number t = term(k);
    if (k == 0) {
      result.value = t;
    } else {
      result.value += t;
    }
    result.shells_used = k + 1;
    result.last_shell_magnitude = t.magnitude();
    if (monitor.observe(result.last_shell_magnitude, result.value.magnitude())) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace f3sum
