#include "f3sum/f3.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "f3sum/detail/scalar.hpp"

namespace f3sum {

namespace {

using detail::magnitude;
using detail::nonpositive_integer;

constexpr long kUnbounded = std::numeric_limits<long>::max();

template <class S>
using TypedFamilies = std::array<std::vector<S>, kFamilyCount>;

template <class S>
TypedFamilies<S> typed(const ParameterSet& ps) {
  TypedFamilies<S> out;
  for (Family f : kAllFamilies) {
    auto& dst = out[static_cast<std::size_t>(f)];
    dst.reserve(ps.size(f));
    for (const Number& x : ps[f]) dst.push_back(detail::unwrap<S>(x));
  }
  return out;
}

/// Per-combo upper limits on the index sum; a lattice point is reachable with
/// a nonzero term only if every combo value is within its limit. The feasible
/// set is closed under decreasing any index.
struct ComboBounds {
  std::array<long, kComboCount> limit;

  ComboBounds() { limit.fill(kUnbounded); }

  void tighten(IndexCombo c, long n) {
    auto& l = limit[static_cast<std::size_t>(c)];
    l = std::min(l, n);
  }

  bool feasible(long m1, long m2, long m3) const {
    for (std::size_t c = 0; c < kComboCount; ++c) {
      if (limit[c] != kUnbounded && combo_value(static_cast<IndexCombo>(c), m1, m2, m3) > limit[c]) {
        return false;
      }
    }
    return true;
  }

  /// Upper limit on m_{var+1} implied by every combo containing it.
  long index_limit(int var) const {
    long l = kUnbounded;
    for (std::size_t c = 0; c < kComboCount; ++c) {
      if (combo_involves(static_cast<IndexCombo>(c), var)) l = std::min(l, limit[c]);
    }
    return l;
  }
};

template <class S>
ComboBounds numerator_bounds(const TypedFamilies<S>& fam) {
  ComboBounds b;
  for (Family f : kAllFamilies) {
    if (!is_numerator(f)) continue;
    for (const S& x : fam[static_cast<std::size_t>(f)]) {
      if (auto n = nonpositive_integer(x)) b.tighten(combo_of(f), *n);
    }
  }
  return b;
}

/// x^m, either generated on demand or read from a finite table (zero beyond).
template <class S>
class PowerTable {
 public:
  static PowerTable geometric(S x) {
    PowerTable t;
    t.base_ = std::move(x);
    t.values_.emplace_back(1);
    return t;
  }

  static PowerTable finite(std::vector<S> values) {
    PowerTable t;
    t.values_ = std::move(values);
    t.finite_ = true;
    return t;
  }

  const S& operator[](std::size_t m) {
    while (values_.size() <= m) {
      if (finite_) {
        values_.emplace_back(0);
      } else {
        values_.push_back(values_.back() * base_);
      }
    }
    return values_[m];
  }

  /// Largest exponent with a possibly nonzero power, if limited.
  std::optional<long> limit() const {
    if (finite_) return static_cast<long>(values_.size()) - 1;
    if (detail::is_zero(base_)) return 0;
    return std::nullopt;
  }

 private:
  S base_{};
  std::vector<S> values_;
  bool finite_ = false;
};

template <class S>
struct TypedResult {
  S value{};
  std::size_t shells_used = 0;
  double last_shell_magnitude = 0.0;
  bool converged = false;
  bool terminated_exactly = false;

  EvaluationResult to_result() && {
    EvaluationResult r;
    r.value = detail::wrap(value);
    r.shells_used = shells_used;
    r.last_shell_magnitude = last_shell_magnitude;
    r.converged = converged;
    r.terminated_exactly = terminated_exactly;
    return r;
  }
};

[[noreturn]] void pole_at(long m1, long m2, long m3, Family f) {
  throw DenominatorPole("denominator Pochhammer of family '" + std::string(family_name(f)) +
                        "' vanishes at (m1,m2,m3) = (" + std::to_string(m1) + "," +
                        std::to_string(m2) + "," + std::to_string(m3) + ")");
}

template <class S>
class TripleSeries {
 public:
  TripleSeries(const TypedFamilies<S>& fam) : fam_(fam) {
    for (int var = 0; var < 3; ++var) {
      for (Family f : kAllFamilies) {
        if (!fam_[static_cast<std::size_t>(f)].empty() && combo_involves(combo_of(f), var)) {
          (is_numerator(f) ? num_dirs_ : den_dirs_)[var].push_back(f);
        }
      }
    }
  }

  /// Ratio term(m + e_var) / term(m) without the argument powers.
  S step(int var, long m1, long m2, long m3) const {
    S num(1);
    for (Family f : num_dirs_[var]) {
      const long n = combo_value(combo_of(f), m1, m2, m3);
      for (const S& p : fam_[static_cast<std::size_t>(f)]) num *= p + S(n);
    }
    const long mv = var == 0 ? m1 : (var == 1 ? m2 : m3);
    S den(mv + 1);
    for (Family f : den_dirs_[var]) {
      const long n = combo_value(combo_of(f), m1, m2, m3);
      for (const S& p : fam_[static_cast<std::size_t>(f)]) {
        S factor = p + S(n);
        if (detail::is_zero(factor)) {
          pole_at(m1 + (var == 0), m2 + (var == 1), m3 + (var == 2), f);
        }
        den *= factor;
      }
    }
    return num / den;
  }

  /// The stall rule is not consulted before shell `min_shells`.
  TypedResult<S> sum(std::array<PowerTable<S>, 3>& w, const ComboBounds& bounds,
                     const TruncationPolicy& policy, std::size_t min_shells = 0) const {
    policy.validate();
    TypedResult<S> out;
    const std::size_t cap = policy.max_total_degree;
    const std::size_t stride = cap + 1;
    std::vector<S> prev;
    std::vector<S> cur;
    StallMonitor monitor(policy);
    S total(0);
    // A finite lattice is summed to its end rather than stopped by the stall rule.
    const bool finite = bounds.index_limit(0) != kUnbounded &&
                        bounds.index_limit(1) != kUnbounded && bounds.index_limit(2) != kUnbounded;

    for (std::size_t shell = 0; shell <= cap; ++shell) {
      const long D = static_cast<long>(shell);
      cur.resize((shell + 1) * stride);
      S shell_sum(0);
      double shell_mag = 0.0;
      bool any = false;
      for (long m1 = 0; m1 <= D; ++m1) {
        for (long m2 = 0; m2 <= D - m1; ++m2) {
          const long m3 = D - m1 - m2;
          if (!bounds.feasible(m1, m2, m3)) continue;
          any = true;
          S& coeff = cur[static_cast<std::size_t>(m1) * stride + static_cast<std::size_t>(m2)];
          if (D == 0) {
            coeff = S(1);
          } else if (m3 > 0) {
            coeff = prev[static_cast<std::size_t>(m1) * stride + static_cast<std::size_t>(m2)] *
                    step(2, m1, m2, m3 - 1);
          } else if (m2 > 0) {
            coeff = prev[static_cast<std::size_t>(m1) * stride + static_cast<std::size_t>(m2 - 1)] *
                    step(1, m1, m2 - 1, 0);
          } else {
            coeff = prev[static_cast<std::size_t>(m1 - 1) * stride] * step(0, m1 - 1, 0, 0);
          }
          S term = coeff * w[0][static_cast<std::size_t>(m1)] * w[1][static_cast<std::size_t>(m2)] *
                   w[2][static_cast<std::size_t>(m3)];
          shell_mag += magnitude(term);
          shell_sum += term;
        }
      }
      if (!any) {
        out.converged = true;
        out.terminated_exactly = true;
        break;
      }
      total += shell_sum;
      out.shells_used = shell + 1;
      out.last_shell_magnitude = shell_mag;
      if (!finite && shell >= min_shells && monitor.observe(shell_mag, magnitude(total))) {
        out.converged = true;
        break;
      }
      std::swap(prev, cur);
    }
    out.value = std::move(total);
    return out;
  }

 private:
  const TypedFamilies<S>& fam_;
  std::array<std::vector<Family>, 3> num_dirs_;
  std::array<std::vector<Family>, 3> den_dirs_;
};

template <class S>
EvaluationResult eval_f3_typed(const ParameterSet& ps, const ArgumentTriple& args,
                               const TruncationPolicy& policy) {
  const TypedFamilies<S> fam = typed<S>(ps);
  std::array<PowerTable<S>, 3> w = {PowerTable<S>::geometric(detail::unwrap<S>(args.x1)),
                                    PowerTable<S>::geometric(detail::unwrap<S>(args.x2)),
                                    PowerTable<S>::geometric(detail::unwrap<S>(args.x3))};
  ComboBounds bounds = numerator_bounds(fam);
  constexpr std::array<IndexCombo, 3> single = {IndexCombo::m1, IndexCombo::m2, IndexCombo::m3};
  for (int var = 0; var < 3; ++var) {
    if (auto l = w[var].limit()) bounds.tighten(single[var], *l);
  }
  return TripleSeries<S>(fam).sum(w, bounds, policy).to_result();
}

template <class S>
EvaluationResult eval_f3_homogeneous_typed(const ParameterSet& ps, const Number& scaled_x1,
                                           const Number& deficit, std::size_t budget,
                                           const Number& x2, const Number& x3,
                                           const TruncationPolicy& policy) {
  const TypedFamilies<S> fam = typed<S>(ps);
  ComboBounds bounds = numerator_bounds(fam);
  const long m1_limit = bounds.index_limit(0);
  if (m1_limit == kUnbounded || m1_limit > static_cast<long>(budget)) {
    throw DomainError("homogeneous evaluation needs the series to terminate in m1 within " +
                      std::to_string(budget));
  }
  const S q = detail::unwrap<S>(scaled_x1);
  const S s = detail::unwrap<S>(deficit);
  // w1[m] = q^m s^(budget-m) for m <= m1_limit.
  const auto top = static_cast<std::size_t>(m1_limit);
  std::vector<S> s_pow(budget + 1);
  s_pow[0] = S(1);
  for (std::size_t j = 1; j <= budget; ++j) s_pow[j] = s_pow[j - 1] * s;
  std::vector<S> w1(top + 1);
  S q_pow(1);
  for (std::size_t m = 0; m <= top; ++m) {
    w1[m] = q_pow * s_pow[budget - m];
    q_pow *= q;
  }
  std::array<PowerTable<S>, 3> w = {PowerTable<S>::finite(std::move(w1)),
                                    PowerTable<S>::geometric(detail::unwrap<S>(x2)),
                                    PowerTable<S>::geometric(detail::unwrap<S>(x3))};
  if (auto l = w[1].limit()) bounds.tighten(IndexCombo::m2, *l);
  if (auto l = w[2].limit()) bounds.tighten(IndexCombo::m3, *l);
  // Shells below m1 = top can be zero (s = 0) without the series having settled.
  return TripleSeries<S>(fam).sum(w, bounds, policy, top).to_result();
}

template <class S>
EvaluationResult eval_pfq_typed(std::span<const Number> numerators,
                                std::span<const Number> denominators, const Number& z,
                                const TruncationPolicy& policy) {
  policy.validate();
  std::vector<S> num;
  std::vector<S> den;
  for (const Number& x : numerators) num.push_back(detail::unwrap<S>(x));
  for (const Number& x : denominators) den.push_back(detail::unwrap<S>(x));
  const S zz = detail::unwrap<S>(z);

  long last = kUnbounded;  // index of the last possibly nonzero term
  for (const S& x : num) {
    if (auto n = nonpositive_integer(x)) last = std::min(last, *n);
  }
  if (detail::is_zero(zz)) last = 0;

  TypedResult<S> out;
  StallMonitor monitor(policy);
  S term(1);
  S total(0);
  for (std::size_t k = 0; k <= policy.max_total_degree; ++k) {
    total += term;
    out.shells_used = k + 1;
    out.last_shell_magnitude = magnitude(term);
    if (static_cast<long>(k) >= last) {
      out.converged = true;
      out.terminated_exactly = true;
      break;
    }
    if (last == kUnbounded && monitor.observe(out.last_shell_magnitude, magnitude(total))) {
      out.converged = true;
      break;
    }
    const S kk(static_cast<long>(k));
    S ratio = zz / S(static_cast<long>(k) + 1);
    for (const S& a : num) ratio *= a + kk;
    for (const S& b : den) {
      S factor = b + kk;
      if (detail::is_zero(factor)) {
        throw DenominatorPole("pFq denominator parameter " + detail::wrap(b).to_string() +
                              " vanishes at term " + std::to_string(k + 1));
      }
      ratio /= factor;
    }
    term *= ratio;
  }
  out.value = std::move(total);
  return std::move(out).to_result();
}

void require_backend(const ParameterSet& ps, Backend backend) {
  if (auto b = ps.backend(); b && *b != backend) {
    throw BackendMismatch("parameter set backend " + std::string(to_string(*b)) +
                          " does not match argument backend " + std::string(to_string(backend)));
  }
}

}  // namespace

Backend ArgumentTriple::backend() const {
  const Backend b = x1.backend();
  if (x2.backend() != b || x3.backend() != b) {
    throw BackendMismatch("argument triple mixes float64 and rational values");
  }
  return b;
}

Number lambda_coeff(const ParameterSet& ps, std::size_t m1, std::size_t m2, std::size_t m3) {
  const Backend backend = ps.backend().value_or(Backend::float64);
  Number num = Number::one(backend);
  Number den = Number::one(backend);
  for (Family f : kAllFamilies) {
    const auto n = static_cast<std::size_t>(combo_value(
        combo_of(f), static_cast<long>(m1), static_cast<long>(m2), static_cast<long>(m3)));
    Number p = pochhammer_product(ps[f], n, backend);
    if (is_numerator(f)) {
      num *= p;
    } else {
      if (p.is_zero()) {
        pole_at(static_cast<long>(m1), static_cast<long>(m2), static_cast<long>(m3), f);
      }
      den *= p;
    }
  }
  return num / den;
}

EvaluationResult eval_f3(const ParameterSet& ps, const ArgumentTriple& args,
                         const TruncationPolicy& policy) {
  const Backend backend = args.backend();
  require_backend(ps, backend);
  if (backend == Backend::float64) return eval_f3_typed<double>(ps, args, policy);
  return eval_f3_typed<Rational>(ps, args, policy);
}

EvaluationResult eval_f3_homogeneous(const ParameterSet& ps, const Number& scaled_x1,
                                     const Number& deficit, std::size_t budget,
                                     const Number& x2, const Number& x3,
                                     const TruncationPolicy& policy) {
  const Backend backend = ArgumentTriple{scaled_x1, x2, x3}.backend();
  if (deficit.backend() != backend) throw BackendMismatch("deficit backend differs from arguments");
  require_backend(ps, backend);
  if (backend == Backend::float64) {
    return eval_f3_homogeneous_typed<double>(ps, scaled_x1, deficit, budget, x2, x3, policy);
  }
  return eval_f3_homogeneous_typed<Rational>(ps, scaled_x1, deficit, budget, x2, x3, policy);
}

EvaluationResult eval_pfq(std::span<const Number> numerators, std::span<const Number> denominators,
                          const Number& z, const TruncationPolicy& policy) {
  const Backend backend = z.backend();
  for (const Number& x : numerators) {
    if (x.backend() != backend) throw BackendMismatch("pFq numerator backend differs from z");
  }
  for (const Number& x : denominators) {
    if (x.backend() != backend) throw BackendMismatch("pFq denominator backend differs from z");
  }
  if (backend == Backend::float64) {
    return eval_pfq_typed<double>(numerators, denominators, z, policy);
  }
  return eval_pfq_typed<Rational>(numerators, denominators, z, policy);
}

double relative_residual(const Number& lhs, const Number& rhs) {
  Number diff = lhs - rhs;
  if (diff.is_zero()) return 0.0;
  return diff.magnitude() / std::max(rhs.magnitude(), 1e-300);
}

}  // namespace f3sum
