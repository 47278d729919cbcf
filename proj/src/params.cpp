#include "f3sum/params.hpp"

namespace f3sum {

namespace {

constexpr std::array<std::string_view, kFamilyCount> kNames = {
    "a", "b", "bp", "bpp", "c", "cp", "cpp", "e", "g", "gp", "gpp", "h", "hp", "hpp"};

// Bitmask of summation indices in a combo.
constexpr unsigned combo_mask(IndexCombo c) {
  unsigned m = 0;
  for (int v = 0; v < 3; ++v) {
    if (combo_involves(c, v)) m |= 1U << v;
  }
  return m;
}

void check_index(const ParameterSet& ps, const FamilyIndex& idx) {
  if (idx.i < 1 || idx.i > ps.size(idx.family)) {
    throw InvalidIndex("index " + std::to_string(idx.i) + " out of range for family '" +
                       std::string(family_name(idx.family)) + "' of length " +
                       std::to_string(ps.size(idx.family)));
  }
}

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyCount; ++i) {
    if (kNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

std::size_t ParameterSet::total_size() const {
  std::size_t n = 0;
  for (const auto& f : families_) n += f.size();
  return n;
}

ParameterSet ParameterSet::with(Family f, std::vector<Number> values) const {
  ParameterSet copy = *this;
  copy.families_[static_cast<std::size_t>(f)] = std::move(values);
  return copy;
}

std::optional<Backend> ParameterSet::backend() const {
  std::optional<Backend> backend;
  for (const auto& fam : families_) {
    for (const Number& x : fam) {
      if (!backend) {
        backend = x.backend();
      } else if (*backend != x.backend()) {
        throw BackendMismatch("parameter set mixes float64 and rational entries");
      }
    }
  }
  return backend;
}

const Number& ParameterSet::at(const FamilyIndex& idx) const {
  check_index(*this, idx);
  return (*this)[idx.family][idx.i - 1];
}

bool operator==(const ParameterSet& lhs, const ParameterSet& rhs) {
  for (std::size_t f = 0; f < kFamilyCount; ++f) {
    const auto& a = lhs.families_[f];
    const auto& b = rhs.families_[f];
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].backend() != b[i].backend() || !(a[i] == b[i])) return false;
    }
  }
  return true;
}

ParameterSet shift_family(const ParameterSet& ps, Family family, long long k) {
  if (k == 0 || ps.size(family) == 0) return ps;
  std::vector<Number> values = ps[family];
  for (Number& x : values) x += Number::integer(k, x.backend());
  return ps.with(family, std::move(values));
}

ParameterSet shift_entry(const ParameterSet& ps, const FamilyIndex& idx, long long k) {
  check_index(ps, idx);
  std::vector<Number> values = ps[idx.family];
  Number& x = values[idx.i - 1];
  x += Number::integer(k, x.backend());
  return ps.with(idx.family, std::move(values));
}

ParameterSet drop_entry(const ParameterSet& ps, const FamilyIndex& idx) {
  check_index(ps, idx);
  std::vector<Number> values = ps[idx.family];
  values.erase(values.begin() + static_cast<std::ptrdiff_t>(idx.i - 1));
  return ps.with(idx.family, std::move(values));
}

ParameterSet push_entry(const ParameterSet& ps, Family family, Number value) {
  std::vector<Number> values = ps[family];
  values.push_back(std::move(value));
  return ps.with(family, std::move(values));
}

std::string PoleWarning::message() const {
  return "DenominatorPole(" + std::string(family_name(where.family)) + "," +
         std::to_string(where.i) + "): entry equals -" + std::to_string(pole_order);
}

std::vector<PoleWarning> validate(const ParameterSet& ps) {
  std::vector<PoleWarning> warnings;
  for (Family den : kAllFamilies) {
    if (is_numerator(den)) continue;
    const unsigned den_mask = combo_mask(combo_of(den));
    for (std::size_t i = 0; i < ps.size(den); ++i) {
      auto pole = ps[den][i].nonpositive_integer();
      if (!pole) continue;
      bool covered = false;
      for (Family num : kAllFamilies) {
        if (!is_numerator(num)) continue;
        // A numerator whose index sum contains the denominator's bounds it.
        const unsigned num_mask = combo_mask(combo_of(num));
        if ((num_mask & den_mask) != den_mask) continue;
        for (const Number& x : ps[num]) {
          auto stop = x.nonpositive_integer();
          if (stop && *stop <= *pole) covered = true;
        }
      }
      if (!covered) warnings.push_back({{den, i + 1}, static_cast<long>(*pole)});
    }
  }
  return warnings;
}

}  // namespace f3sum
