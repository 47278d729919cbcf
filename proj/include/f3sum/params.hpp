#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f3sum/number.hpp"

namespace f3sum {

/// The fourteen parameter families of the general triple series. Primes are
/// spelled out: bp = b', bpp = b'', and so on.
enum class Family : std::uint8_t { a, b, bp, bpp, c, cp, cpp, e, g, gp, gpp, h, hp, hpp };

inline constexpr std::size_t kFamilyCount = 14;

inline constexpr std::array<Family, kFamilyCount> kAllFamilies = {
    Family::a,  Family::b,  Family::bp,  Family::bpp, Family::c,  Family::cp,  Family::cpp,
    Family::e,  Family::g,  Family::gp,  Family::gpp, Family::h,  Family::hp,  Family::hpp};

/// Which sum of summation indices a family's Pochhammer symbols run over.
enum class IndexCombo : std::uint8_t { m123, m12, m23, m31, m1, m2, m3 };

inline constexpr std::size_t kComboCount = 7;

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

constexpr bool is_numerator(Family f) { return static_cast<int>(f) < 7; }

constexpr IndexCombo combo_of(Family f) {
  return static_cast<IndexCombo>(static_cast<int>(f) % 7);
}

/// True when the combo's index sum contains m_{var+1} (var is 0-based).
constexpr bool combo_involves(IndexCombo c, int var) {
  switch (c) {
    case IndexCombo::m123: return true;
    case IndexCombo::m12: return var == 0 || var == 1;
    case IndexCombo::m23: return var == 1 || var == 2;
    case IndexCombo::m31: return var == 2 || var == 0;
    case IndexCombo::m1: return var == 0;
    case IndexCombo::m2: return var == 1;
    case IndexCombo::m3: return var == 2;
  }
  return false;
}

constexpr long combo_value(IndexCombo c, long m1, long m2, long m3) {
  switch (c) {
    case IndexCombo::m123: return m1 + m2 + m3;
    case IndexCombo::m12: return m1 + m2;
    case IndexCombo::m23: return m2 + m3;
    case IndexCombo::m31: return m3 + m1;
    case IndexCombo::m1: return m1;
    case IndexCombo::m2: return m2;
    case IndexCombo::m3: return m3;
  }
  return 0;
}

/// Position i (1-based) inside one family.
struct FamilyIndex {
  Family family;
  std::size_t i;
};

/// Immutable-by-convention value holding the fourteen parameter lists.
class ParameterSet {
 public:
  ParameterSet() = default;

  const std::vector<Number>& operator[](Family f) const {
    return families_[static_cast<std::size_t>(f)];
  }
  std::size_t size(Family f) const { return (*this)[f].size(); }
  std::size_t total_size() const;

  /// Copy with family `f` replaced by `values`.
  ParameterSet with(Family f, std::vector<Number> values) const;

  /// The common backend of all entries; nullopt when every family is empty.
  /// Throws BackendMismatch when entries disagree.
  std::optional<Backend> backend() const;

  const Number& at(const FamilyIndex& idx) const;

  friend bool operator==(const ParameterSet& lhs, const ParameterSet& rhs);

 private:
  std::array<std::vector<Number>, kFamilyCount> families_;
};

/// Every entry of `family` increased by k.
ParameterSet shift_family(const ParameterSet& ps, Family family, long long k);

/// Only the addressed entry changes by k. Throws InvalidIndex.
ParameterSet shift_entry(const ParameterSet& ps, const FamilyIndex& idx, long long k);

/// Removes the addressed entry. Throws InvalidIndex.
ParameterSet drop_entry(const ParameterSet& ps, const FamilyIndex& idx);

/// Appends `value` to `family`.
ParameterSet push_entry(const ParameterSet& ps, Family family, Number value);

struct PoleWarning {
  FamilyIndex where;
  long pole_order;  ///< the entry equals -pole_order

  std::string message() const;
};

/// Denominator entries that are non-positive integers and are not preceded by
/// an earlier numerator termination over an index sum covering theirs.
std::vector<PoleWarning> validate(const ParameterSet& ps);

}  // namespace f3sum
