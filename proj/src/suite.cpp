#include "f3sum/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "f3sum/random_instances.hpp"

namespace f3sum {

namespace {

struct Planned {
  std::string group;
  RowKind kind;
  std::size_t index;
  std::function<CheckReport()> check;
};

CheckReport lemma_check(LemmaId id, std::uint64_t seed, std::size_t index) {
  const LemmaInstance inst = random_lemma_instance(id, seed, index);
  const PfqSeries series = lemma_series(id, inst.n, inst.params);
  const TruncationPolicy exact{1e-15, inst.n + 2, 1};
  CheckReport report;
  report.lhs_diag = eval_pfq(series.numerators, series.denominators, series.z, exact);
  report.lhs = report.lhs_diag.value;
  report.rhs = lemma_closed_form(id, inst.n, inst.params);
  report.rhs_diag = {.value = report.rhs, .shells_used = 0, .last_shell_magnitude = 0.0,
                     .converged = true, .terminated_exactly = true};
  report.residual = relative_residual(report.lhs, report.rhs);
  report.pass = report.lhs == report.rhs && report.lhs_diag.terminated_exactly;
  report.status = report.pass ? CheckStatus::passed : CheckStatus::residual_too_large;
  return report;
}

std::vector<SuiteRow> run_plan(const std::vector<Planned>& plan, std::size_t threads) {
  std::vector<SuiteRow> rows(plan.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < plan.size(); k = next++) {
      SuiteRow& row = rows[k];
      row.group = plan[k].group;
      row.kind = plan[k].kind;
      row.index = plan[k].index;
      try {
        const CheckReport report = plan[k].check();
        row.residual = report.residual;
        row.converged_lhs = report.lhs_diag.converged;
        row.converged_rhs = report.rhs_diag.converged;
        row.pass = report.pass;
        row.status = report.status;
        row.reason = report.reason;
      } catch (const std::exception& e) {
        row.residual = std::numeric_limits<double>::infinity();
        row.status = CheckStatus::evaluation_error;
        row.reason = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(plan.size(), 1));
  if (threads <= 1) {
    worker();
    return rows;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

std::string_view kind_name(RowKind kind) {
  switch (kind) {
    case RowKind::identity: return "identity";
    case RowKind::collapse: return "collapse";
    case RowKind::special: return "special";
    case RowKind::lemma: return "lemma";
  }
  return "?";
}

Json residual_json(double r) {
  if (std::isfinite(r)) return r;
  return format_double(r);
}

Json group_json(const GroupSummary& g) {
  Json out = Json::object();
  out["id"] = g.id;
  out["kind"] = std::string(kind_name(g.kind));
  out["instances"] = g.total;
  out["passed"] = g.passed;
  out["max_residual"] = residual_json(g.max_residual);
  if (g.collapse_total > 0) {
    out["collapse_instances"] = g.collapse_total;
    out["collapse_passed"] = g.collapse_passed;
    out["collapse_max_residual"] = residual_json(g.collapse_max_residual);
  }
  return out;
}

}  // namespace

void SuiteConfig::validate() const {
  if (instances_per_identity < 1) throw InvalidInstance("instances per identity must be >= 1");
  if (!(tol > 0) || !(collapse_tol > 0)) throw InvalidInstance("tolerances must be positive");
  policy.shells.validate();
  policy.outer.validate();
  special_policy().shells.validate();
}

SummationPolicy SuiteConfig::special_policy() const {
  SummationPolicy p = policy;
  p.shells.max_total_degree = special_max_degree;
  return p;
}

SuiteResult run_suite(const SuiteConfig& config) {
  config.validate();
  const std::size_t n = config.instances_per_identity;
  std::vector<Planned> plan;
  for (const IdentityDef& def : identity_registry()) {
    const IdentityId id = def.id;
    const std::string name(def.name);
    for (std::size_t k = 0; k < n; ++k) {
      plan.push_back({name, RowKind::identity, k, [&config, id, k] {
                        auto inst = random_identity_instance(id, config.seed, k, config.backend);
                        return check_identity(inst, config.policy, config.tol);
                      }});
    }
    for (std::size_t k = 0; k < n; ++k) {
      plan.push_back({name + "@zero", RowKind::collapse, k, [&config, id, k] {
                        auto inst = collapsed(
                            random_identity_instance(id, config.seed, k, config.backend));
                        return check_identity(inst, config.policy, config.collapse_tol);
                      }});
    }
  }
  for (SpecialCaseId id : kAllSpecialCases) {
    for (std::size_t k = 0; k < n; ++k) {
      plan.push_back({std::string(special_name(id)), RowKind::special, k, [&config, id, k] {
                        auto inst = random_special_instance(id, config.seed, k, config.backend);
                        return check_special_case(id, inst.values, inst.t, inst.args,
                                                  config.special_policy(), config.tol);
                      }});
    }
  }
  for (LemmaId id : kAllLemmas) {
    for (std::size_t k = 0; k < config.lemma_instances; ++k) {
      plan.push_back({std::string(lemma_name(id)), RowKind::lemma, k,
                      [&config, id, k] { return lemma_check(id, config.seed, k); }});
    }
  }

  SuiteResult result;
  result.rows = run_plan(plan, config.threads);

  auto group_for = [](std::vector<GroupSummary>& groups, const std::string& id,
                      RowKind kind) -> GroupSummary& {
    for (auto& g : groups) {
      if (g.id == id) return g;
    }
    groups.push_back({.id = id, .kind = kind});
    return groups.back();
  };
  result.all_pass = true;
  for (const SuiteRow& row : result.rows) {
    result.all_pass = result.all_pass && row.pass;
    const double r =
        std::isnan(row.residual) ? std::numeric_limits<double>::infinity() : row.residual;
    if (row.kind == RowKind::lemma) {
      GroupSummary& g = group_for(result.lemma_groups, row.group, row.kind);
      ++g.total;
      g.passed += row.pass ? 1 : 0;
      g.max_residual = std::max(g.max_residual, r);
    } else if (row.kind == RowKind::collapse) {
      GroupSummary& g = group_for(result.identity_groups, row.group.substr(0, row.group.find('@')),
                                  RowKind::identity);
      ++g.collapse_total;
      g.collapse_passed += row.pass ? 1 : 0;
      g.collapse_max_residual = std::max(g.collapse_max_residual, r);
    } else {
      GroupSummary& g = group_for(result.identity_groups, row.group, row.kind);
      ++g.total;
      g.passed += row.pass ? 1 : 0;
      g.max_residual = std::max(g.max_residual, r);
    }
  }
  return result;
}

std::string suite_csv(const SuiteResult& result) {
  std::ostringstream out;
  out << "identity_id,instance_index,residual,converged_lhs,converged_rhs,pass\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const SuiteRow& row : result.rows) {
    out << row.group << ',' << row.index << ',' << format_double(row.residual) << ','
        << flag(row.converged_lhs) << ',' << flag(row.converged_rhs) << ',' << flag(row.pass)
        << '\n';
  }
  return out.str();
}

Json suite_summary(const SuiteResult& result, const SuiteConfig& config) {
  Json out = Json::object();
  out["seed"] = config.seed;
  out["instances_per_identity"] = config.instances_per_identity;
  out["lemma_instances"] = config.lemma_instances;
  out["backend"] = std::string(to_string(config.backend));
  out["tol"] = config.tol;
  out["collapse_tol"] = config.collapse_tol;
  out["max_degree"] = config.policy.shells.max_total_degree;
  out["special_max_degree"] = config.special_max_degree;
  out["outer_cap"] = config.policy.outer.max_total_degree;
  out["all_pass"] = result.all_pass;
  std::size_t checks = 0;
  std::size_t passed = 0;
  for (const SuiteRow& row : result.rows) {
    ++checks;
    passed += row.pass ? 1 : 0;
  }
  out["checks"] = checks;
  out["passed"] = passed;
  Json groups = Json::array();
  for (const auto& g : result.identity_groups) groups.push_back(group_json(g));
  out["identity_groups"] = std::move(groups);
  Json lemmas = Json::array();
  for (const auto& g : result.lemma_groups) lemmas.push_back(group_json(g));
  out["lemma_groups"] = std::move(lemmas);
  Json failures = Json::array();
  for (const SuiteRow& row : result.rows) {
    if (row.pass) continue;
    failures.push_back({{"id", row.group},
                        {"instance_index", row.index},
                        {"status", std::string(to_string(row.status))},
                        {"residual", residual_json(row.residual)},
                        {"reason", row.reason}});
  }
  out["failures"] = std::move(failures);
  return out;
}

}  // namespace f3sum
