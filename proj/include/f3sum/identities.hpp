#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "f3sum/f3.hpp"
#include "f3sum/number.hpp"
#include "f3sum/params.hpp"
#include "f3sum/series.hpp"

namespace f3sum {

enum class IdentityId : std::uint8_t {
  T1a, T1b, T1c,
  T2x1, T2x2, T2x3,
  T3a, T3c,
  T4a, T4c,
  T5c,
  T6a, T6c,
  T7c,
  T8c,
  T9c,
  T10c,
};

inline constexpr std::size_t kIdentityCount = 17;

/// Free scalars an identity may carry.
struct Scalars {
  std::optional<Number> t;
  std::optional<Number> r;
  std::optional<Number> d;
};

enum ScalarMask : std::uint8_t { kNeedsT = 1, kNeedsR = 2, kNeedsD = 4 };

/// c0 + ct*t + cr*r + cd*d + cp*p, where p is the selected parameter (a_i or c_i).
struct Affine {
  Rational c0 = 0;
  Rational ct = 0;
  Rational cr = 0;
  Rational cd = 0;
  Rational cp = 0;
};

/// Power base of the outer series term.
enum class OuterBase : std::uint8_t {
  t,              ///< t^k
  x1,             ///< x1^k
  minus_x1,       ///< (-x1)^k
  minus_one,      ///< (-1)^k, the t^k part lives in the homogeneous inner series
  inv_x1_minus_1  ///< (x1-1)^{-k}, the (t+x1)^k part lives in the inner series
};

/// How the inner triple series of the k-th outer term is formed.
enum class InnerKind : std::uint8_t {
  shifted,         ///< parameter shifts by k, arguments unchanged
  terminating_t,   ///< c_i -> -k, x1 -> x1 (1+t)/t
  terminating_tx1  ///< c_i -> -k, x1 -> x1 (1+t)/(t+x1)
};

enum class RhsArguments : std::uint8_t {
  unchanged,
  scale_123,  ///< all three divided by (1-t)
  scale_12,
  scale_1,
  shift_1,  ///< x1 + t
  shift_2,
  shift_3,
};

enum class RhsPrefactor : std::uint8_t {
  none,
  one_minus_t_pow_minus_p,  ///< (1-t)^{-p}
  one_plus_t_pow_minus_p,   ///< (1+t)^{-p}
  one_minus_x1_over_one_plus_t_pow_p,  ///< ((1-x1)/(1+t))^{p}
};

struct PushedEntry {
  Family family;
  Affine value;
};

/// One summation formula written as data: an outer series
///   sum_k weight_k * F(ps_k; args_k)
/// equated to prefactor * F(ps'; args').
struct IdentityDef {
  IdentityId id;
  std::string_view name;   ///< stable id, e.g. "T5c"
  std::optional<Family> family;  ///< family of the selected parameter p
  std::uint8_t scalars = 0;      ///< ScalarMask bits

  // Outer weight: prod [f]_k over weight_num / prod [f]_k over weight_den,
  // skipping p when weight_skips_selected, times extra Pochhammers of affine
  // values, times base^k / k!.
  std::vector<Family> weight_num;
  std::vector<Family> weight_den;
  bool weight_skips_selected = false;
  std::vector<Affine> extra_num;
  std::vector<Affine> extra_den;
  /// Multiply by (d)_k (1 + d/2)_k / (d/2)_k, evaluated as (d+1)_{k-1} (d+2k).
  bool well_poised_d = false;
  OuterBase base = OuterBase::t;

  InnerKind inner = InnerKind::shifted;
  std::vector<Family> shifted;    ///< families whose entries move to +k
  bool selected_shifted = false;  ///< whether p itself moves to p+k

  RhsPrefactor prefactor = RhsPrefactor::none;
  RhsArguments rhs_args = RhsArguments::unchanged;
  bool rhs_drops_selected = false;
  std::vector<PushedEntry> rhs_push;
};

std::span<const IdentityDef> identity_registry();
const IdentityDef& identity_definition(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);
std::string_view identity_name(IdentityId id);

struct IdentityInstance {
  IdentityId id;
  ParameterSet ps;
  std::size_t i = 1;  ///< 1-based position in the identity's family; ignored when it has none
  Scalars scalars;
  ArgumentTriple args;

  Backend backend() const { return args.backend(); }
};

/// Outer and inner truncation for identity checks.
struct SummationPolicy {
  TruncationPolicy shells{1e-15, 100, 3};
  TruncationPolicy outer{1e-15, 40, 3};
};

enum class CheckStatus : std::uint8_t {
  passed,
  residual_too_large,
  not_converged,
  invalid_instance,
  evaluation_error,
};

std::string_view to_string(CheckStatus status);

struct CheckReport {
  Number lhs;
  Number rhs;
  double residual = 0.0;
  bool pass = false;
  EvaluationResult lhs_diag;
  EvaluationResult rhs_diag;
  CheckStatus status = CheckStatus::evaluation_error;
  std::string reason;
};

/// Throws InvalidInstance when required scalars or the family entry are
/// missing, backends are mixed, or a weight denominator has a pole.
void validate_instance(const IdentityInstance& inst);

/// Conservative convergence guards: |t| < 1 for T1*/T9c and
/// |(t+x1)/(x1-1)| < 1 for T10c. Returns a reason when violated.
std::optional<std::string> guard_violation(const IdentityInstance& inst);

/// The parameter set of the k-th inner series on the left-hand side.
ParameterSet lhs_inner_parameters(const IdentityInstance& inst, std::size_t k);

/// The transformed parameter set and arguments of the right-hand side.
ParameterSet rhs_parameters(const IdentityInstance& inst);
ArgumentTriple rhs_arguments(const IdentityInstance& inst);

EvaluationResult lhs_value(const IdentityInstance& inst, const SummationPolicy& policy);
EvaluationResult rhs_value(const IdentityInstance& inst, const SummationPolicy& policy);

/// Evaluates both sides and compares them. Errors become failed reports.
CheckReport check_identity(const IdentityInstance& inst, const SummationPolicy& policy, double tol);

/// Affine value in the instance's backend.
Number evaluate_affine(const Affine& form, const IdentityInstance& inst);

}  // namespace f3sum
