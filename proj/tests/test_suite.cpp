#include <doctest.h>

#include <set>

#include "f3sum/errors.hpp"
#include "f3sum/lemmas.hpp"
#include "f3sum/special.hpp"
#include "f3sum/suite.hpp"

using namespace f3sum;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.instances_per_identity = 3;
  c.lemma_instances = 5;
  return c;
}

}  // namespace

TEST_CASE("suite configuration is validated") {
  SuiteConfig c = small_config();
  c.instances_per_identity = 0;
  CHECK_THROWS_AS(run_suite(c), InvalidInstance);
  c = small_config();
  c.tol = 0;
  CHECK_THROWS_AS(run_suite(c), InvalidInstance);
}

TEST_CASE("suite covers every identity, special case and lemma") {
  const SuiteConfig c = small_config();
  const SuiteResult r = run_suite(c);
  CHECK(r.all_pass);
  CHECK(r.identity_groups.size() == kIdentityCount + kAllSpecialCases.size());
  CHECK(r.lemma_groups.size() == kAllLemmas.size());
  std::set<std::string> groups;
  for (const auto& row : r.rows) groups.insert(row.group);
  CHECK(groups.count("T1a") == 1);
  CHECK(groups.count("T1a@zero") == 1);
  CHECK(groups.count("HA") == 1);
  for (const auto& g : r.identity_groups) {
    CAPTURE(g.id);
    CHECK(g.total == c.instances_per_identity);
    CHECK(g.passed == g.total);
  }
  for (const auto& g : r.lemma_groups) CHECK(g.total == c.lemma_instances);
}

TEST_CASE("suite output is deterministic across thread counts") {
  SuiteConfig c = small_config();
  const std::string one = suite_csv(run_suite(c));
  c.threads = 4;
  const std::string four = suite_csv(run_suite(c));
  CHECK(one == four);
  CHECK(one == suite_csv(run_suite(c)));
  c.seed = 43;
  CHECK(one != suite_csv(run_suite(c)));
}

TEST_CASE("csv has the documented header and one line per row") {
  const SuiteConfig c = small_config();
  const SuiteResult r = run_suite(c);
  const std::string csv = suite_csv(r);
  CHECK(csv.rfind("identity_id,instance_index,residual,converged_lhs,converged_rhs,pass\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == r.rows.size() + 1);
  const Json s = suite_summary(r, c);
  CHECK(s.at("all_pass") == Json(true));
  CHECK(s.at("checks").get<std::size_t>() == r.rows.size());
}
