// f3sum: evaluate the triple series, check summation identities, run the suite.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "f3sum/f3.hpp"
#include "f3sum/identities.hpp"
#include "f3sum/json_io.hpp"
#include "f3sum/lemmas.hpp"
#include "f3sum/special.hpp"
#include "f3sum/suite.hpp"

namespace {

enum Exit : int { kPass = 0, kInputError = 1, kNotConverged = 2, kIdentityFailure = 3 };

struct PolicyFlags {
  std::optional<double> series_tol;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> stall_window;
  std::optional<std::size_t> outer_cap;
  std::string backend = "float64";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--series-tol", series_tol, "Relative size of a negligible shell");
    cmd.add_option("--max-degree", max_degree, "Largest total degree summed");
    cmd.add_option("--stall-window", stall_window, "Consecutive negligible shells before stopping");
    cmd.add_option("--backend", backend, "float64 or rational");
  }
  void add_outer_to(CLI::App& cmd) {
    cmd.add_option("--outer-cap", outer_cap, "Largest index of an outer series");
  }

  void apply(f3sum::TruncationPolicy& p) const {
    if (series_tol) p.tol = *series_tol;
    if (max_degree) p.max_total_degree = *max_degree;
    if (stall_window) p.stall_window = *stall_window;
  }
  f3sum::SummationPolicy summation(f3sum::SummationPolicy base) const {
    apply(base.shells);
    if (series_tol) base.outer.tol = *series_tol;
    if (stall_window) base.outer.stall_window = *stall_window;
    if (outer_cap) base.outer.max_total_degree = *outer_cap;
    base.shells.validate();
    base.outer.validate();
    return base;
  }
};

void print(const f3sum::Json& j) { std::cout << j.dump(2) << '\n'; }

std::string valid_ids() {
  std::string out;
  for (const auto& def : f3sum::identity_registry()) out += std::string(def.name) + ' ';
  for (auto id : f3sum::kAllSpecialCases) out += std::string(f3sum::special_name(id)) + ' ';
  out.pop_back();
  return out;
}

int run_eval(const std::string& params_file, const std::vector<std::string>& x,
             const PolicyFlags& flags) {
  const auto backend = f3sum::parse_backend(flags.backend);
  f3sum::TruncationPolicy policy;
  flags.apply(policy);
  policy.validate();
  const auto ps = f3sum::parameters_from_json(f3sum::read_json_file(params_file), backend);
  const f3sum::ArgumentTriple args{f3sum::Number::parse(x[0], backend),
                                   f3sum::Number::parse(x[1], backend),
                                   f3sum::Number::parse(x[2], backend)};
  for (const auto& w : f3sum::validate(ps)) std::cerr << "warning: " << w.message() << '\n';
  const auto result = f3sum::eval_f3(ps, args, policy);
  print(f3sum::to_json(result));
  if (!result.converged) {
    std::cerr << "not converged after " << result.shells_used << " shells\n";
    return kNotConverged;
  }
  return kPass;
}

int exit_for(const f3sum::CheckReport& report) {
  switch (report.status) {
    case f3sum::CheckStatus::passed: return kPass;
    case f3sum::CheckStatus::not_converged: return kNotConverged;
    case f3sum::CheckStatus::invalid_instance: return kInputError;
    default: return kIdentityFailure;
  }
}

int run_check(const std::string& id, const std::string& instance_file, double tol,
              const PolicyFlags& flags) {
  const auto backend = f3sum::parse_backend(flags.backend);
  const auto policy = flags.summation(f3sum::SummationPolicy{});
  f3sum::CheckReport report;
  if (auto identity = f3sum::parse_identity_id(id)) {
    const auto j = f3sum::read_json_file(instance_file);
    report = f3sum::check_identity(f3sum::identity_instance_from_json(*identity, j, backend), policy,
                                   tol);
  } else if (auto special = f3sum::parse_special_id(id)) {
    const auto j = f3sum::read_json_file(instance_file);
    const auto inst = f3sum::special_instance_from_json(*special, j, backend);
    report = f3sum::check_special_case(*special, inst.values, inst.t, inst.args, policy, tol);
  } else {
    std::cerr << "unknown id '" << id << "'; valid ids: " << valid_ids() << '\n';
    return kInputError;
  }
  f3sum::Json out = f3sum::Json::object();
  out["id"] = id;
  const f3sum::Json body = f3sum::to_json(report);
  for (const auto& [k, v] : body.items()) out[k] = v;
  print(out);
  if (!report.reason.empty()) std::cerr << report.reason << '\n';
  return exit_for(report);
}

int run_suite(f3sum::SuiteConfig config, const PolicyFlags& flags, const std::string& out_path) {
  config.backend = f3sum::parse_backend(flags.backend);
  config.policy = flags.summation(config.policy);
  const auto result = f3sum::run_suite(config);
  if (!out_path.empty()) {
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) throw f3sum::ParseError("cannot write '" + out_path + "'");
    csv << f3sum::suite_csv(result);
  }
  print(f3sum::suite_summary(result, config));
  return result.all_pass ? kPass : kIdentityFailure;
}

void run_list() {
  std::cout << "identities:\n";
  for (const auto& def : f3sum::identity_registry()) {
    std::cout << "  " << def.name;
    if (def.family) std::cout << "  family=" << f3sum::family_name(*def.family);
    std::string scalars;
    if (def.scalars & f3sum::kNeedsT) scalars += 't';
    if (def.scalars & f3sum::kNeedsR) scalars += 'r';
    if (def.scalars & f3sum::kNeedsD) scalars += 'd';
    std::cout << "  scalars=" << scalars << '\n';
  }
  std::cout << "special cases:\n";
  for (auto id : f3sum::kAllSpecialCases) {
    std::cout << "  " << f3sum::special_name(id) << "  values=";
    const auto names = f3sum::special_value_names(id);
    for (std::size_t k = 0; k < names.size(); ++k) std::cout << (k ? "," : "") << names[k];
    std::cout << '\n';
  }
  std::cout << "lemmas:\n";
  for (auto id : f3sum::kAllLemmas) std::cout << "  " << f3sum::lemma_name(id) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triple hypergeometric series evaluation and identity checks"};
  app.require_subcommand(1);

  PolicyFlags eval_flags;
  std::string params_file;
  std::vector<std::string> x;
  auto* eval = app.add_subcommand("eval", "Evaluate the series for a parameter file");
  eval->add_option("params", params_file, "Parameter set JSON file")->required();
  eval->add_option("x", x, "Arguments x1 x2 x3")->expected(3)->required();
  eval_flags.add_to(*eval);

  PolicyFlags check_flags;
  std::string check_id;
  std::string instance_file;
  double check_tol = 1e-8;
  auto* check = app.add_subcommand("check", "Check one identity or special case");
  check->add_option("id", check_id, "Identity or special-case id")->required();
  check->add_option("instance", instance_file, "Instance JSON file")->required();
  check->add_option("--tol", check_tol, "Largest passing relative residual");
  check_flags.add_to(*check);
  check_flags.add_outer_to(*check);

  PolicyFlags suite_flags;
  f3sum::SuiteConfig config;
  std::string out_path;
  auto* suite = app.add_subcommand("suite", "Run the seeded randomized suite");
  suite->add_option("--seed", config.seed, "Base seed");
  suite->add_option("--instances", config.instances_per_identity, "Instances per identity");
  suite->add_option("--lemma-instances", config.lemma_instances, "Instances per lemma");
  suite->add_option("--tol", config.tol, "Largest passing relative residual");
  suite->add_option("--collapse-tol", config.collapse_tol, "Tolerance with free scalars at zero");
  suite->add_option("--threads", config.threads, "Worker threads, 0 for all cores");
  suite->add_option("--special-max-degree", config.special_max_degree,
                    "Largest total degree summed for the special-case rows");
  suite->add_option("--out", out_path, "Write per-check CSV here");
  suite_flags.add_to(*suite);
  suite_flags.add_outer_to(*suite);

  app.add_subcommand("list", "List identity, special-case and lemma ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInputError;
  }

  try {
    if (*eval) return run_eval(params_file, x, eval_flags);
    if (*check) return run_check(check_id, instance_file, check_tol, check_flags);
    if (*suite) return run_suite(config, suite_flags, out_path);
    run_list();
    return kPass;
  } catch (const f3sum::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
