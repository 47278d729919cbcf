#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "f3sum/f3.hpp"
#include "f3sum/identities.hpp"
#include "f3sum/lemmas.hpp"
#include "f3sum/random_instances.hpp"
#include "f3sum/special.hpp"
#include "f3sum/suite.hpp"
#include "oracles.hpp"

using namespace f3sum;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool report(int number, const char* title, double limit_seconds, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = run();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_seconds <= 0 || seconds < limit_seconds;
  const bool pass = out.pass && in_time;
  char timing[64];
  if (limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", seconds, limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  }
  std::printf("%s %d %s: %s; %s%s\n", pass ? "PASS" : "FAIL", number, title, out.detail.c_str(),
              timing, in_time ? "" : ", over time");
  std::fflush(stdout);
  return pass;
}

Outcome lemma_exactness() {
  std::size_t checked = 0;
  std::size_t exact = 0;
  for (LemmaId id : kAllLemmas) {
    for (std::size_t k = 0; k < 50; ++k) {
      const LemmaInstance inst = random_lemma_instance(id, kSeed, k);
      const PfqSeries s = lemma_series(id, inst.n, inst.params);
      const TruncationPolicy policy{1e-15, inst.n + 2, 1};
      const EvaluationResult series = eval_pfq(s.numerators, s.denominators, s.z, policy);
      const Number closed = lemma_closed_form(id, inst.n, inst.params);
      ++checked;
      if (series.terminated_exactly && series.value.is_rational() && series.value == closed &&
          relative_residual(series.value, closed) == 0.0) {
        ++exact;
      } else {
        std::printf("  %s #%zu n=%zu: series %s, closed form %s\n", std::string(lemma_name(id)).c_str(), k,
                    inst.n, series.value.to_string().c_str(), closed.to_string().c_str());
      }
    }
  }
  return {exact == checked, std::to_string(exact) + "/" + std::to_string(checked) + " exact"};
}

Outcome oracle_equivalence() {
  const TruncationPolicy policy{1e-16, 100, 3};
  double worst = 0.0;
  for (std::size_t k = 0; k < 10; ++k) {
    const auto [ps, args] = random_series_instance(kSeed, k, Backend::float64);
    const double got = eval_f3(ps, args, policy).value.float64();
    const long double want = oracle::f3(
        ps, {args.x1.to_double(), args.x2.to_double(), args.x3.to_double()}, 40);
    worst = std::max(worst, oracle::rel(got, want));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "10 sets, max relative difference %.3g", worst);
  return {worst < 1e-12, buf};
}

Outcome identity_suite() {
  SuiteConfig config;
  config.seed = kSeed;
  config.threads = 1;
  const SuiteResult result = run_suite(config);
  std::size_t total = 0, passed = 0, ctotal = 0, cpassed = 0;
  double worst = 0.0, cworst = 0.0;
  for (const SuiteRow& row : result.rows) {
    if (row.kind == RowKind::identity) {
      ++total;
      passed += row.pass && row.residual < config.tol;
      worst = std::max(worst, row.residual);
    } else if (row.kind == RowKind::collapse) {
      ++ctotal;
      cpassed += row.pass && row.residual < config.collapse_tol;
      cworst = std::max(cworst, row.residual);
    }
    if ((row.kind == RowKind::identity || row.kind == RowKind::collapse) && !row.pass) {
      std::printf("  %s #%zu residual %.3g %s\n", row.group.c_str(), row.index, row.residual,
                  row.reason.c_str());
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu/%zu instances (max residual %.3g), %zu/%zu collapses (max residual %.3g)",
                passed, total, worst, cpassed, ctotal, cworst);
  const bool pass = total == kIdentityCount * 25 && passed == total &&
                    ctotal == kIdentityCount * 25 && cpassed == ctotal;
  return {pass, buf};
}

Outcome special_cases() {
  const TruncationPolicy deep{1e-16, 100, 3};
  const SummationPolicy policy = SuiteConfig{}.special_policy();
  std::size_t mapped = 0, summed = 0, total = 0;
  double worst_map = 0.0;
  for (SpecialCaseId id : kAllSpecialCases) {
    for (std::size_t k = 0; k < 20; ++k) {
      const SpecialInstance s = random_special_instance(id, kSeed, k, Backend::float64);
      const auto& v = s.values;
      auto d = [&](std::size_t j) { return v[j].to_double(); };
      const std::array<double, 3> x = {s.args.x1.to_double(), s.args.x2.to_double(),
                                       s.args.x3.to_double()};
      long double direct = 0;
      switch (id) {
        case SpecialCaseId::FA3:
          direct = oracle::fa3(d(0), {d(1), d(2), d(3)}, {d(4), d(5), d(6)}, x, 60);
          break;
        case SpecialCaseId::FD3:
          direct = oracle::fd3(d(0), {d(1), d(2), d(3)}, d(4), x, 60);
          break;
        case SpecialCaseId::HA:
          direct = oracle::ha(d(0), d(1), d(2), d(3), d(4), x, 60);
          break;
      }
      const double got = eval_f3(special_parameters(id, v), s.args, deep).value.float64();
      const double rel = oracle::rel(got, direct);
      worst_map = std::max(worst_map, rel);
      mapped += rel < 1e-12;
      summed += check_special_case(id, v, s.t, s.args, policy, 1e-8).pass;
      ++total;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "mapping %zu/%zu (max %.3g), summation %zu/%zu", mapped, total,
                worst_map, summed, total);
  return {mapped == total && summed == total, buf};
}

Outcome terminating_exactness() {
  const SummationPolicy policy{.shells = {1e-15, 64, 3}, .outer = {1e-15, 64, 3}};
  std::size_t exact = 0;
  for (std::size_t k = 0; k < 10; ++k) {
    const IdentityInstance inst = random_terminating_t9c(kSeed, k);
    const CheckReport r = check_identity(inst, policy, 0.0);
    if (r.lhs.is_rational() && r.lhs == r.rhs && r.residual == 0.0 &&
        r.lhs_diag.terminated_exactly && r.rhs_diag.terminated_exactly) {
      ++exact;
    } else {
      std::printf("  T9c #%zu lhs %s rhs %s\n", k, r.lhs.to_string().c_str(),
                  r.rhs.to_string().c_str());
    }
  }
  return {exact == 10, std::to_string(exact) + "/10 exact"};
}

Outcome determinism() {
  SuiteConfig config;
  config.seed = kSeed;
  config.threads = 1;
  const std::string first = suite_csv(run_suite(config));
  const std::string second = suite_csv(run_suite(config));
  config.threads = 4;
  const std::string four = suite_csv(run_suite(config));
  config.threads = 0;
  const std::string all = suite_csv(run_suite(config));
  const bool same = first == second && first == four && first == all;
  return {same, same ? "CSV identical across 2 runs and 1, 4 and all threads"
                     : "CSV differs between runs or thread counts"};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "lemma exactness", 5, lemma_exactness);
  ok &= report(2, "F3 oracle equivalence", 10, oracle_equivalence);
  ok &= report(3, "identity suite", 300, identity_suite);
  ok &= report(4, "special cases", 60, special_cases);
  ok &= report(5, "terminating exactness", 30, terminating_exactness);
  ok &= report(6, "determinism", 0, determinism);
  return ok ? 0 : 1;
}
