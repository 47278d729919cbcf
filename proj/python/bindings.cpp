#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "f3sum/f3.hpp"
#include "f3sum/identities.hpp"
#include "f3sum/json_io.hpp"
#include "f3sum/lemmas.hpp"
#include "f3sum/special.hpp"
#include "f3sum/suite.hpp"

namespace py = pybind11;

namespace {

f3sum::TruncationPolicy make_policy(double tol, std::size_t max_degree, std::size_t stall_window) {
  f3sum::TruncationPolicy policy{tol, max_degree, stall_window};
  policy.validate();
  return policy;
}

std::string eval_json(const std::string& params, const std::vector<std::string>& x,
                      const std::string& backend, double tol, std::size_t max_degree,
                      std::size_t stall_window) {
  if (x.size() != 3) throw f3sum::InvalidInstance("expected three arguments");
  const auto b = f3sum::parse_backend(backend);
  const auto ps = f3sum::parameters_from_json(f3sum::parse_json(params), b);
  const f3sum::ArgumentTriple args{f3sum::Number::parse(x[0], b), f3sum::Number::parse(x[1], b),
                                   f3sum::Number::parse(x[2], b)};
  const auto result = f3sum::eval_f3(ps, args, make_policy(tol, max_degree, stall_window));
  return f3sum::to_json(result).dump();
}

std::string check_json(const std::string& id, const std::string& instance,
                       const std::string& backend, double tol) {
  const auto b = f3sum::parse_backend(backend);
  const auto j = f3sum::parse_json(instance);
  const f3sum::SummationPolicy policy;
  f3sum::CheckReport report;
  if (auto identity = f3sum::parse_identity_id(id)) {
    report = f3sum::check_identity(f3sum::identity_instance_from_json(*identity, j, b), policy, tol);
  } else if (auto special = f3sum::parse_special_id(id)) {
    const auto inst = f3sum::special_instance_from_json(*special, j, b);
    report = f3sum::check_special_case(*special, inst.values, inst.t, inst.args, policy, tol);
  } else {
    throw f3sum::InvalidInstance("unknown id '" + id + "'");
  }
  return f3sum::to_json(report).dump();
}

py::tuple suite(std::uint64_t seed, std::size_t instances, std::size_t lemma_instances,
                std::size_t threads) {
  f3sum::SuiteConfig config;
  config.seed = seed;
  config.instances_per_identity = instances;
  config.lemma_instances = lemma_instances;
  config.threads = threads;
  f3sum::SuiteResult result;
  {
    py::gil_scoped_release release;
    result = f3sum::run_suite(config);
  }
  return py::make_tuple(f3sum::suite_summary(result, config).dump(), f3sum::suite_csv(result));
}

std::string lemma_pair(const std::string& name, std::size_t n,
                       const std::vector<std::string>& params) {
  auto id = f3sum::parse_lemma(name);
  if (!id) throw f3sum::InvalidInstance("unknown lemma '" + name + "'");
  std::vector<f3sum::Number> values;
  for (const auto& p : params) values.push_back(f3sum::Number::parse(p, f3sum::Backend::rational));
  const auto series = f3sum::lemma_series(*id, n, values);
  const auto sum = f3sum::eval_pfq(series.numerators, series.denominators, series.z,
                                   {1e-15, n + 2, 1});
  f3sum::Json out = f3sum::Json::object();
  out["series"] = f3sum::to_json(sum.value);
  out["closed_form"] = f3sum::to_json(f3sum::lemma_closed_form(*id, n, values));
  return out.dump();
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> out;
  for (const auto& def : f3sum::identity_registry()) out.emplace_back(def.name);
  for (auto id : f3sum::kAllSpecialCases) out.emplace_back(f3sum::special_name(id));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triple hypergeometric series and summation identity checks";

  py::register_exception<f3sum::Error>(m, "F3Error", PyExc_ValueError);

  m.def("eval_json", &eval_json, py::arg("params"), py::arg("x"), py::arg("backend") = "float64",
        py::arg("tol") = 1e-15, py::arg("max_degree") = 100, py::arg("stall_window") = 3);
  m.def("check_json", &check_json, py::arg("id"), py::arg("instance"),
        py::arg("backend") = "float64", py::arg("tol") = 1e-8);
  m.def("suite", &suite, py::arg("seed") = 42, py::arg("instances") = 25,
        py::arg("lemma_instances") = 50, py::arg("threads") = 1);
  m.def("lemma_json", &lemma_pair, py::arg("name"), py::arg("n"), py::arg("params"));
  m.def("identity_ids", &identity_ids);
  m.def("pochhammer", [](const std::string& x, std::size_t k, const std::string& backend) {
    return f3sum::pochhammer(f3sum::Number::parse(x, f3sum::parse_backend(backend)), k).to_string();
  }, py::arg("x"), py::arg("k"), py::arg("backend") = "rational");
}
