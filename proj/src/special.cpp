#include "f3sum/special.hpp"

#include <string>

namespace f3sum {

namespace {

constexpr std::array<std::string_view, 7> kFaNames = {"a", "b1", "b2", "b3", "c1", "c2", "c3"};
constexpr std::array<std::string_view, 5> kFdNames = {"a", "b1", "b2", "b3", "c"};
constexpr std::array<std::string_view, 5> kHaNames = {"a", "b1", "b2", "c1", "c2"};

}  // namespace

std::string_view special_name(SpecialCaseId id) {
  switch (id) {
    case SpecialCaseId::FA3: return "FA3";
    case SpecialCaseId::FD3: return "FD3";
    case SpecialCaseId::HA: return "HA";
  }
  return "?";
}

std::optional<SpecialCaseId> parse_special_id(std::string_view name) {
  for (SpecialCaseId id : kAllSpecialCases) {
    if (special_name(id) == name) return id;
  }
  return std::nullopt;
}

std::size_t special_arity(SpecialCaseId id) { return special_value_names(id).size(); }

std::span<const std::string_view> special_value_names(SpecialCaseId id) {
  switch (id) {
    case SpecialCaseId::FA3: return kFaNames;
    case SpecialCaseId::FD3: return kFdNames;
    case SpecialCaseId::HA: return kHaNames;
  }
  return {};
}

ParameterSet lauricella_fa3(const Number& a, const Number& b1, const Number& b2, const Number& b3,
                            const Number& c1, const Number& c2, const Number& c3) {
  return ParameterSet{}
      .with(Family::a, {a})
      .with(Family::c, {b1})
      .with(Family::cp, {b2})
      .with(Family::cpp, {b3})
      .with(Family::h, {c1})
      .with(Family::hp, {c2})
      .with(Family::hpp, {c3});
}

ParameterSet lauricella_fd3(const Number& a, const Number& b1, const Number& b2, const Number& b3,
                            const Number& c) {
  return ParameterSet{}
      .with(Family::a, {a})
      .with(Family::c, {b1})
      .with(Family::cp, {b2})
      .with(Family::cpp, {b3})
      .with(Family::e, {c});
}

ParameterSet srivastava_ha(const Number& a, const Number& b1, const Number& b2, const Number& c1,
                           const Number& c2) {
  return ParameterSet{}
      .with(Family::bpp, {a})
      .with(Family::b, {b1})
      .with(Family::bp, {b2})
      .with(Family::h, {c1})
      .with(Family::gp, {c2});
}

ParameterSet special_parameters(SpecialCaseId id, std::span<const Number> v) {
  if (v.size() != special_arity(id)) {
    throw InvalidInstance(std::string(special_name(id)) + " expects " +
                          std::to_string(special_arity(id)) + " values, got " +
                          std::to_string(v.size()));
  }
  switch (id) {
    case SpecialCaseId::FA3: return lauricella_fa3(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
    case SpecialCaseId::FD3: return lauricella_fd3(v[0], v[1], v[2], v[3], v[4]);
    case SpecialCaseId::HA: return srivastava_ha(v[0], v[1], v[2], v[3], v[4]);
  }
  throw InvalidInstance("unknown special case");
}

IdentityInstance special_instance(SpecialCaseId id, std::span<const Number> values, const Number& t,
                                  const ArgumentTriple& args) {
  IdentityInstance inst{.id = id == SpecialCaseId::HA ? IdentityId::T2x1 : IdentityId::T1a,
                        .ps = special_parameters(id, values),
                        .i = 1,
                        .scalars = {.t = t},
                        .args = args};
  return inst;
}

CheckReport check_special_case(SpecialCaseId id, std::span<const Number> values, const Number& t,
                               const ArgumentTriple& args, const SummationPolicy& policy,
                               double tol) {
  IdentityInstance inst;
  try {
    inst = special_instance(id, values, t, args);
  } catch (const Error& e) {
    CheckReport report;
    report.status = CheckStatus::invalid_instance;
    report.reason = e.what();
    return report;
  }
  return check_identity(inst, policy, tol);
}

}  // namespace f3sum
