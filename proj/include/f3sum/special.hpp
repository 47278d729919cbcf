#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "f3sum/identities.hpp"

namespace f3sum {

/// Classical three-variable functions reachable by placing parameters.
enum class SpecialCaseId : std::uint8_t { FA3, FD3, HA };

inline constexpr std::array<SpecialCaseId, 3> kAllSpecialCases = {
    SpecialCaseId::FA3, SpecialCaseId::FD3, SpecialCaseId::HA};

std::string_view special_name(SpecialCaseId id);
std::optional<SpecialCaseId> parse_special_id(std::string_view name);

/// FA3: (a, b1, b2, b3, c1, c2, c3); FD3: (a, b1, b2, b3, c); HA: (a, b1, b2, c1, c2).
std::size_t special_arity(SpecialCaseId id);
std::span<const std::string_view> special_value_names(SpecialCaseId id);

/// Lauricella F_A: sum (a)_{m1+m2+m3} prod (b_j)_{m_j} / prod (c_j)_{m_j} x^m / m!.
ParameterSet lauricella_fa3(const Number& a, const Number& b1, const Number& b2, const Number& b3,
                            const Number& c1, const Number& c2, const Number& c3);

/// Lauricella F_D: sum (a)_{m1+m2+m3} prod (b_j)_{m_j} / (c)_{m1+m2+m3} x^m / m!.
ParameterSet lauricella_fd3(const Number& a, const Number& b1, const Number& b2, const Number& b3,
                            const Number& c);

/// Srivastava H_A with coefficient
/// (a)_{m3+m1} (b1)_{m1+m2} (b2)_{m2+m3} / ((c1)_{m1} (c2)_{m2+m3}).
ParameterSet srivastava_ha(const Number& a, const Number& b1, const Number& b2, const Number& c1,
                           const Number& c2);

/// Constructs the parameter set from `values` in the order of special_value_names.
ParameterSet special_parameters(SpecialCaseId id, std::span<const Number> values);

/// The identity instance a special case is checked through: FA3 and FD3 use
/// T1a on the `a` entry, HA uses T2x1.
IdentityInstance special_instance(SpecialCaseId id, std::span<const Number> values, const Number& t,
                                  const ArgumentTriple& args);

CheckReport check_special_case(SpecialCaseId id, std::span<const Number> values, const Number& t,
                               const ArgumentTriple& args, const SummationPolicy& policy,
                               double tol);

}  // namespace f3sum
