#include "f3sum/identities.hpp"

#include <algorithm>
#include <utility>

namespace f3sum {

namespace {

using F = Family;

// Families whose index sums contain m1, m2, m3 respectively.
const std::vector<Family> kWithM1 = {F::a, F::b, F::bpp, F::c, F::e, F::g, F::gpp, F::h};
const std::vector<Family> kWithM2 = {F::a, F::b, F::bp, F::cp, F::e, F::g, F::gp, F::hp};
const std::vector<Family> kWithM3 = {F::a, F::bp, F::bpp, F::cpp, F::e, F::gp, F::gpp, F::hpp};
const std::vector<Family> kNumM1 = {F::a, F::b, F::bpp, F::c};
const std::vector<Family> kDenM1 = {F::e, F::g, F::gpp, F::h};

Rational q(long num, long den = 1) { return Rational(num, den); }

const Affine kP{.cp = 1};
const Affine kR{.cr = 1};
const Affine kD{.cd = 1};

std::vector<IdentityDef> build_registry() {
  std::vector<IdentityDef> defs;
  defs.reserve(kIdentityCount);

  auto binomial_shift = [&](IdentityId id, std::string_view name, Family fam,
                            RhsArguments args) {
    IdentityDef d{.id = id, .name = name, .family = fam, .scalars = kNeedsT};
    d.extra_num = {kP};
    d.base = OuterBase::t;
    d.selected_shifted = true;
    d.prefactor = RhsPrefactor::one_minus_t_pow_minus_p;
    d.rhs_args = args;
    defs.push_back(std::move(d));
  };
  binomial_shift(IdentityId::T1a, "T1a", F::a, RhsArguments::scale_123);
  binomial_shift(IdentityId::T1b, "T1b", F::b, RhsArguments::scale_12);
  binomial_shift(IdentityId::T1c, "T1c", F::c, RhsArguments::scale_1);

  auto argument_shift = [&](IdentityId id, std::string_view name,
                            std::vector<Family> num, std::vector<Family> den,
                            const std::vector<Family>& shifted, RhsArguments args) {
    IdentityDef d{.id = id, .name = name, .scalars = kNeedsT};
    d.weight_num = std::move(num);
    d.weight_den = std::move(den);
    d.base = OuterBase::t;
    d.shifted = shifted;
    d.rhs_args = args;
    defs.push_back(std::move(d));
  };
  argument_shift(IdentityId::T2x1, "T2x1", kNumM1, kDenM1, kWithM1, RhsArguments::shift_1);
  argument_shift(IdentityId::T2x2, "T2x2", {F::a, F::b, F::bp, F::cp},
                 {F::e, F::g, F::gp, F::hp}, kWithM2, RhsArguments::shift_2);
  argument_shift(IdentityId::T2x3, "T2x3", {F::a, F::bp, F::bpp, F::cpp},
                 {F::e, F::gp, F::gpp, F::hpp}, kWithM3, RhsArguments::shift_3);

  // The remaining x1-series all share the weight [.]_k over the m1 families with
  // the selected entry left out, and shift every m1 family by k.
  auto x1_series = [&](IdentityId id, std::string_view name, Family fam,
                       std::uint8_t scalars, OuterBase base, bool selected_shifted) {
    IdentityDef d{.id = id, .name = name, .family = fam, .scalars = scalars};
    d.weight_num = kNumM1;
    d.weight_den = kDenM1;
    d.weight_skips_selected = true;
    d.base = base;
    d.shifted = kWithM1;
    d.selected_shifted = selected_shifted;
    return d;
  };

  {
    auto d = x1_series(IdentityId::T3a, "T3a", F::a, kNeedsR, OuterBase::x1, false);
    d.extra_num = {kR};
    d.rhs_drops_selected = true;
    d.rhs_push = {{F::a, {.cr = 1, .cp = 1}}, {F::bp, kP}, {F::gp, {.cr = 1, .cp = 1}}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T3c, "T3c", F::c, kNeedsR, OuterBase::x1, false);
    d.extra_num = {kR};
    d.rhs_drops_selected = true;
    d.rhs_push = {{F::c, {.cr = 1, .cp = 1}}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T4a, "T4a", F::a, kNeedsD, OuterBase::minus_x1, true);
    d.extra_num = {kD};
    d.rhs_push = {{F::c, {.cd = -1, .cp = 1}}, {F::h, kP}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T4c, "T4c", F::c, kNeedsD, OuterBase::minus_x1, true);
    d.extra_num = {kD};
    d.rhs_drops_selected = true;
    d.rhs_push = {{F::c, {.cd = -1, .cp = 1}}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T5c, "T5c", F::c, kNeedsR | kNeedsD, OuterBase::x1,
                       false);
    d.extra_num = {kD, kR};
    d.extra_den = {{.cr = 1, .cd = 1, .cp = 1}};
    d.rhs_drops_selected = true;
    d.rhs_push = {{F::c, {.cr = 1, .cp = 1}},
                  {F::c, {.cd = 1, .cp = 1}},
                  {F::h, {.cr = 1, .cd = 1, .cp = 1}}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T6a, "T6a", F::a, kNeedsD, OuterBase::minus_x1, true);
    d.well_poised_d = true;
    d.rhs_push = {{F::c, {.c0 = 2, .cd = 1, .cp = -1}},
                  {F::c, {.c0 = -1, .cd = -1, .cp = 1}},
                  {F::h, {.c0 = 1, .cd = 1, .cp = -1}},
                  {F::h, kP}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T6c, "T6c", F::c, kNeedsD, OuterBase::minus_x1, true);
    d.well_poised_d = true;
    d.rhs_drops_selected = true;
    d.rhs_push = {{F::c, {.c0 = 2, .cd = 1, .cp = -1}},
                  {F::c, {.c0 = -1, .cd = -1, .cp = 1}},
                  {F::h, {.c0 = 1, .cd = 1, .cp = -1}}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T7c, "T7c", F::c, kNeedsR, OuterBase::x1, false);
    d.extra_num = {kR, {.cp = q(-1, 2)}};
    d.extra_den = {{.c0 = 1, .cr = 1, .cp = q(1, 2)}};
    d.rhs_drops_selected = true;
    d.rhs_push = {{F::c, {.cr = 1, .cp = 1}},
                  {F::c, {.cp = q(1, 2)}},
                  {F::c, {.c0 = 1, .cr = q(1, 2), .cp = q(1, 2)}},
                  {F::h, {.c0 = 1, .cr = 1, .cp = q(1, 2)}},
                  {F::h, {.cr = q(1, 2), .cp = q(1, 2)}}};
    defs.push_back(std::move(d));
  }
  {
    auto d = x1_series(IdentityId::T8c, "T8c", F::c, kNeedsD, OuterBase::x1, false);
    d.well_poised_d = true;
    d.extra_num = {{.cp = q(-1, 2)}};
    d.extra_den = {{.c0 = 1, .cd = 1, .cp = q(1, 2)}};
    d.rhs_drops_selected = true;
    d.rhs_push = {{F::c, {.cp = q(1, 2)}},
                  {F::c, {.cd = 1, .cp = 1}},
                  {F::h, {.c0 = 1, .cd = 1, .cp = q(1, 2)}}};
    defs.push_back(std::move(d));
  }
  {
    IdentityDef d{.id = IdentityId::T9c, .name = "T9c", .family = F::c,
                  .scalars = kNeedsT};
    d.extra_num = {kP};
    d.base = OuterBase::minus_one;
    d.inner = InnerKind::terminating_t;
    d.prefactor = RhsPrefactor::one_plus_t_pow_minus_p;
    defs.push_back(std::move(d));
  }
  {
    IdentityDef d{.id = IdentityId::T10c, .name = "T10c", .family = F::c,
                  .scalars = kNeedsT};
    d.extra_num = {kP};
    d.base = OuterBase::inv_x1_minus_1;
    d.inner = InnerKind::terminating_tx1;
    d.prefactor = RhsPrefactor::one_minus_x1_over_one_plus_t_pow_p;
    defs.push_back(std::move(d));
  }
  return defs;
}

const std::vector<IdentityDef>& registry() {
  static const std::vector<IdentityDef> defs = build_registry();
  return defs;
}

bool contains(const std::vector<Family>& fams, Family f) {
  return std::find(fams.begin(), fams.end(), f) != fams.end();
}

Number like(long long v, Backend backend) { return Number::integer(v, backend); }

const Number& scalar_or_throw(const std::optional<Number>& v, const char* name) {
  if (!v) throw InvalidInstance(std::string("missing scalar '") + name + "'");
  return *v;
}

Number selected_value(const IdentityDef& def, const IdentityInstance& inst) {
  if (!def.family) return Number::zero(inst.backend());
  return inst.ps.at({*def.family, inst.i});
}

Number outer_base(const IdentityDef& def, const IdentityInstance& inst) {
  const Backend b = inst.backend();
  switch (def.base) {
    case OuterBase::t: return *inst.scalars.t;
    case OuterBase::x1: return inst.args.x1;
    case OuterBase::minus_x1: return -inst.args.x1;
    case OuterBase::minus_one: return like(-1, b);
    case OuterBase::inv_x1_minus_1: return like(1, b) / (inst.args.x1 - like(1, b));
  }
  return like(0, b);
}

/// s^k F(ps_k; q x1 / s, x2, x3) for the terminating inner series.
EvaluationResult terminating_inner(const IdentityDef& def, const IdentityInstance& inst,
                                   const ParameterSet& ps_k, std::size_t k,
                                   const TruncationPolicy& policy) {
  const Backend b = inst.backend();
  const Number& t = *inst.scalars.t;
  const Number deficit = def.inner == InnerKind::terminating_t ? t : t + inst.args.x1;
  const Number scaled_x1 = (like(1, b) + t) * inst.args.x1;
  return eval_f3_homogeneous(ps_k, scaled_x1, deficit, k, inst.args.x2, inst.args.x3, policy);
}

}  // namespace

std::span<const IdentityDef> identity_registry() { return registry(); }

const IdentityDef& identity_definition(IdentityId id) {
  return registry()[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (const IdentityDef& d : registry()) {
    if (d.name == name) return d.id;
  }
  return std::nullopt;
}

std::string_view identity_name(IdentityId id) { return identity_definition(id).name; }

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::residual_too_large: return "residual_too_large";
    case CheckStatus::not_converged: return "not_converged";
    case CheckStatus::invalid_instance: return "invalid_instance";
    case CheckStatus::evaluation_error: return "evaluation_error";
  }
  return "?";
}

Number evaluate_affine(const Affine& form, const IdentityInstance& inst) {
  const IdentityDef& def = identity_definition(inst.id);
  const Backend b = inst.backend();
  Number v = convert(Number(form.c0), b);
  auto add = [&](const Rational& coeff, const std::optional<Number>& x, const char* name) {
    if (coeff == 0) return;
    v += convert(Number(coeff), b) * scalar_or_throw(x, name);
  };
  add(form.ct, inst.scalars.t, "t");
  add(form.cr, inst.scalars.r, "r");
  add(form.cd, inst.scalars.d, "d");
  if (form.cp != 0) v += convert(Number(form.cp), b) * selected_value(def, inst);
  return v;
}

void validate_instance(const IdentityInstance& inst) {
  const IdentityDef& def = identity_definition(inst.id);
  Backend b{};
  try {
    b = inst.backend();
    if (auto pb = inst.ps.backend(); pb && *pb != b) {
      throw BackendMismatch("parameter backend differs from argument backend");
    }
    for (const auto* s : {&inst.scalars.t, &inst.scalars.r, &inst.scalars.d}) {
      if (*s && (*s)->backend() != b) throw BackendMismatch("scalar backend differs from arguments");
    }
  } catch (const BackendMismatch& e) {
    throw InvalidInstance(e.what());
  }
  if ((def.scalars & kNeedsT) && !inst.scalars.t) throw InvalidInstance("missing scalar 't'");
  if ((def.scalars & kNeedsR) && !inst.scalars.r) throw InvalidInstance("missing scalar 'r'");
  if ((def.scalars & kNeedsD) && !inst.scalars.d) throw InvalidInstance("missing scalar 'd'");
  if (def.family) {
    const std::size_t n = inst.ps.size(*def.family);
    if (n == 0) {
      throw InvalidInstance("identity " + std::string(def.name) + " needs a nonempty family '" +
                            std::string(family_name(*def.family)) + "'");
    }
    if (inst.i < 1 || inst.i > n) {
      throw InvalidInstance("index i=" + std::to_string(inst.i) + " outside 1.." +
                            std::to_string(n));
    }
  }
  for (const Affine& form : def.extra_den) {
    Number v = evaluate_affine(form, inst);
    if (v.nonpositive_integer()) {
      throw InvalidInstance("weight denominator Pochhammer (" + v.to_string() + ")_k has a pole");
    }
  }
}

std::optional<std::string> guard_violation(const IdentityInstance& inst) {
  const Backend b = inst.backend();
  switch (inst.id) {
    case IdentityId::T1a:
    case IdentityId::T1b:
    case IdentityId::T1c:
    case IdentityId::T9c:
      if (inst.scalars.t && !(inst.scalars.t->magnitude() < 1.0)) {
        return "outside convergence guard |t| < 1";
      }
      break;
    case IdentityId::T10c: {
      const Number den = inst.args.x1 - like(1, b);
      if (den.is_zero() || !inst.scalars.t ||
          !(((*inst.scalars.t + inst.args.x1) / den).magnitude() < 1.0)) {
        return "outside convergence guard |(t+x1)/(x1-1)| < 1";
      }
      break;
    }
    default:
      break;
  }
  return std::nullopt;
}

ParameterSet lhs_inner_parameters(const IdentityInstance& inst, std::size_t k) {
  const IdentityDef& def = identity_definition(inst.id);
  const auto kk = static_cast<long long>(k);
  if (def.inner != InnerKind::shifted) {
    ParameterSet ps = drop_entry(inst.ps, {*def.family, inst.i});
    return push_entry(ps, *def.family, like(-kk, inst.backend()));
  }
  ParameterSet ps = inst.ps;
  std::optional<Number> held;
  if (def.family && contains(def.shifted, *def.family) != def.selected_shifted) {
    // The selected entry moves differently from the rest of its family.
    held = ps.at({*def.family, inst.i});
    ps = drop_entry(ps, {*def.family, inst.i});
  }
  for (Family f : def.shifted) ps = shift_family(ps, f, kk);
  if (held) {
    Number v = def.selected_shifted ? *held + like(kk, held->backend()) : *held;
    ps = push_entry(ps, *def.family, std::move(v));
  }
  return ps;
}

ParameterSet rhs_parameters(const IdentityInstance& inst) {
  const IdentityDef& def = identity_definition(inst.id);
  ParameterSet ps = inst.ps;
  if (def.rhs_drops_selected) ps = drop_entry(ps, {*def.family, inst.i});
  for (const PushedEntry& e : def.rhs_push) ps = push_entry(ps, e.family, evaluate_affine(e.value, inst));
  return ps;
}

ArgumentTriple rhs_arguments(const IdentityInstance& inst) {
  const IdentityDef& def = identity_definition(inst.id);
  ArgumentTriple a = inst.args;
  const Backend b = inst.backend();
  auto scale = [&]() { return like(1, b) - *inst.scalars.t; };
  switch (def.rhs_args) {
    case RhsArguments::unchanged: break;
    case RhsArguments::scale_123:
      a.x3 /= scale();
      [[fallthrough]];
    case RhsArguments::scale_12:
      a.x2 /= scale();
      [[fallthrough]];
    case RhsArguments::scale_1:
      a.x1 /= scale();
      break;
    case RhsArguments::shift_1: a.x1 += *inst.scalars.t; break;
    case RhsArguments::shift_2: a.x2 += *inst.scalars.t; break;
    case RhsArguments::shift_3: a.x3 += *inst.scalars.t; break;
  }
  return a;
}

EvaluationResult rhs_value(const IdentityInstance& inst, const SummationPolicy& policy) {
  validate_instance(inst);
  if (auto why = guard_violation(inst)) throw NotConverged(*why);
  const IdentityDef& def = identity_definition(inst.id);
  const Backend b = inst.backend();
  EvaluationResult r = eval_f3(rhs_parameters(inst), rhs_arguments(inst), policy.shells);
  const Number one = like(1, b);
  switch (def.prefactor) {
    case RhsPrefactor::none: break;
    case RhsPrefactor::one_minus_t_pow_minus_p:
      r.value *= power(one - *inst.scalars.t, -selected_value(def, inst));
      break;
    case RhsPrefactor::one_plus_t_pow_minus_p:
      r.value *= power(one + *inst.scalars.t, -selected_value(def, inst));
      break;
    case RhsPrefactor::one_minus_x1_over_one_plus_t_pow_p:
      r.value *= power((one - inst.args.x1) / (one + *inst.scalars.t), selected_value(def, inst));
      break;
  }
  return r;
}

EvaluationResult lhs_value(const IdentityInstance& inst, const SummationPolicy& policy) {
  validate_instance(inst);
  if (auto why = guard_violation(inst)) throw NotConverged(*why);
  policy.outer.validate();
  const IdentityDef& def = identity_definition(inst.id);
  const Backend b = inst.backend();

  const Number base = outer_base(def, inst);
  std::vector<Number> weight_num;
  std::vector<Number> weight_den;
  auto collect = [&](const std::vector<Family>& fams, std::vector<Number>& out) {
    for (Family f : fams) {
      const auto& values = inst.ps[f];
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (def.weight_skips_selected && def.family == f && j + 1 == inst.i) continue;
        out.push_back(values[j]);
      }
    }
  };
  collect(def.weight_num, weight_num);
  collect(def.weight_den, weight_den);
  for (const Affine& form : def.extra_num) weight_num.push_back(evaluate_affine(form, inst));
  for (const Affine& form : def.extra_den) weight_den.push_back(evaluate_affine(form, inst));
  const Number d = def.well_poised_d ? *inst.scalars.d : Number::zero(b);

  bool outer_terminates = base.is_zero();
  for (const Number& x : weight_num) outer_terminates = outer_terminates || x.nonpositive_integer();

  EvaluationResult out;
  out.value = Number::zero(b);
  StallMonitor monitor(policy.outer);
  Number weight = like(1, b);        // everything except the well-poised factor
  Number poised_head = like(1, b);   // (d+1)_{k-1}
  // Largest |weight| * last shell of an inner series that hit its cap; such a
  // term is settled when that shell is negligible against the whole sum.
  double unsettled = 0.0;
  bool inner_exact = true;
  bool outer_done = false;
  bool outer_exact = false;

  for (std::size_t k = 0; k <= policy.outer.max_total_degree; ++k) {
    const Number kk = like(static_cast<long long>(k), b);
    if (weight.is_zero() || (def.well_poised_d && k >= 1 && poised_head.is_zero())) {
      outer_done = outer_exact = true;
      break;
    }
    Number w = weight;
    if (def.well_poised_d && k >= 1) w *= poised_head * (d + kk + kk);

    const ParameterSet ps_k = lhs_inner_parameters(inst, k);
    EvaluationResult inner = def.inner == InnerKind::shifted
                                 ? eval_f3(ps_k, inst.args, policy.shells)
                                 : terminating_inner(def, inst, ps_k, k, policy.shells);
    inner_exact = inner_exact && inner.terminated_exactly;

    const Number term = w * inner.value;
    if (!inner.converged) {
      unsettled = std::max(unsettled, w.magnitude() * inner.last_shell_magnitude);
    }
    out.value += term;
    out.shells_used = k + 1;
    out.last_shell_magnitude = term.magnitude();
    if (!outer_terminates && monitor.observe(out.last_shell_magnitude, out.value.magnitude())) {
      outer_done = true;
      break;
    }

    Number num = base;
    for (const Number& x : weight_num) num *= x + kk;
    if (num.is_zero()) {
      weight = num;
    } else {
      Number den = kk + like(1, b);
      for (const Number& x : weight_den) {
        Number factor = x + kk;
        if (factor.is_zero()) {
          throw DenominatorPole("outer weight denominator vanishes at k = " + std::to_string(k + 1));
        }
        den *= factor;
      }
      weight *= num / den;
    }
    if (def.well_poised_d && k >= 1) poised_head *= d + kk;
  }

  const bool inner_settled =
      unsettled <= policy.outer.tol * std::max(out.value.magnitude(), 1.0);
  out.converged = outer_done && inner_settled;
  out.terminated_exactly = outer_exact && inner_exact;
  return out;
}

CheckReport check_identity(const IdentityInstance& inst, const SummationPolicy& policy, double tol) {
  CheckReport report;
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    report.status = CheckStatus::invalid_instance;
    report.reason = e.what();
    return report;
  }
  if (auto why = guard_violation(inst)) {
    report.status = CheckStatus::not_converged;
    report.reason = *why;
    return report;
  }
  try {
    report.lhs_diag = lhs_value(inst, policy);
    report.rhs_diag = rhs_value(inst, policy);
  } catch (const NotConverged& e) {
    report.status = CheckStatus::not_converged;
    report.reason = e.what();
    return report;
  } catch (const Error& e) {
    report.status = CheckStatus::evaluation_error;
    report.reason = e.what();
    return report;
  }
  report.lhs = report.lhs_diag.value;
  report.rhs = report.rhs_diag.value;
  report.residual = relative_residual(report.lhs, report.rhs);
  const bool converged = report.lhs_diag.converged && report.rhs_diag.converged;
  report.pass = converged && report.residual <= tol;
  if (!converged) {
    report.status = CheckStatus::not_converged;
    report.reason = report.lhs_diag.converged ? "right-hand side did not converge"
                                              : "left-hand side did not converge";
  } else if (!report.pass) {
    report.status = CheckStatus::residual_too_large;
    report.reason = "relative residual " + format_double(report.residual) + " exceeds " +
                    format_double(tol);
  } else {
    report.status = CheckStatus::passed;
  }
  return report;
}

}  // namespace f3sum
