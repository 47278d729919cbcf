#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f3sum/identities.hpp"
#include "f3sum/json_io.hpp"

namespace f3sum {

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t instances_per_identity = 25;
  std::size_t lemma_instances = 50;
  double tol = 1e-8;
  double collapse_tol = 1e-13;
  SummationPolicy policy{.shells = {1e-15, 28, 3}, .outer = {1e-15, 40, 3}};
  /// Shell cap for the special-case rows. The H_A series settles more slowly
  /// than the identity series at |x1 + t| near 0.25.
  std::size_t special_max_degree = 40;
  Backend backend = Backend::float64;
  /// Worker threads; 0 means one per hardware thread.
  std::size_t threads = 1;

  /// Throws InvalidInstance on an unusable configuration.
  void validate() const;
  /// `policy` with the special-case shell cap.
  SummationPolicy special_policy() const;
};

enum class RowKind : std::uint8_t { identity, collapse, special, lemma };

struct SuiteRow {
  std::string group;  ///< "T5c", "T5c@zero", "FA3", "watson_4f3", ...
  RowKind kind = RowKind::identity;
  std::size_t index = 0;
  double residual = 0.0;
  bool converged_lhs = false;
  bool converged_rhs = false;
  bool pass = false;
  CheckStatus status = CheckStatus::evaluation_error;
  std::string reason;
};

struct GroupSummary {
  std::string id;
  RowKind kind = RowKind::identity;
  std::size_t total = 0;
  std::size_t passed = 0;
  double max_residual = 0.0;
  std::size_t collapse_total = 0;
  std::size_t collapse_passed = 0;
  double collapse_max_residual = 0.0;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;  ///< in deterministic group and instance order
  std::vector<GroupSummary> identity_groups;
  std::vector<GroupSummary> lemma_groups;
  bool all_pass = false;
};

SuiteResult run_suite(const SuiteConfig& config);

/// identity_id,instance_index,residual,converged_lhs,converged_rhs,pass
std::string suite_csv(const SuiteResult& result);
Json suite_summary(const SuiteResult& result, const SuiteConfig& config);

}  // namespace f3sum
