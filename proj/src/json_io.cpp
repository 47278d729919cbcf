#include "f3sum/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace f3sum {

namespace {

std::string describe(const Json& j) {
  std::string s = j.dump();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

const Json& require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object, got " + describe(j));
  return j;
}

void reject_unknown_keys(const Json& j, std::initializer_list<std::string_view> allowed,
                         const char* what) {
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (std::string_view k : allowed) known = known || key == k;
    if (!known) throw ParseError(std::string("unknown key '") + key + "' in " + what);
  }
}

std::optional<Number> optional_number(const Json& j, const char* key, Backend backend) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return number_from_json(*it, backend);
}

}  // namespace

Json to_json(const Number& x) {
  if (x.is_float()) return x.float64();
  return x.to_string();
}

Number number_from_json(const Json& j, Backend backend) {
  if (j.is_string()) return Number::parse(j.get<std::string>(), backend);
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return Number::parse(std::to_string(j.get<std::uint64_t>()), backend);
    }
    return Number::integer(j.get<std::int64_t>(), backend);
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (backend == Backend::float64) return Number(v);
    return Number::parse(format_double(v), backend);
  }
  throw ParseError("expected a number or numeric string, got " + describe(j));
}

Json to_json(const ParameterSet& ps) {
  Json out = Json::object();
  for (Family f : kAllFamilies) {
    if (ps[f].empty()) continue;
    Json list = Json::array();
    for (const Number& v : ps[f]) list.push_back(to_json(v));
    out[std::string(family_name(f))] = std::move(list);
  }
  return out;
}

ParameterSet parameters_from_json(const Json& j, Backend backend) {
  require_object(j, "parameter set");
  ParameterSet ps;
  for (const auto& [key, value] : j.items()) {
    auto f = parse_family(key);
    if (!f) throw ParseError("unknown parameter family '" + key + "'");
    if (!value.is_array()) throw ParseError("family '" + key + "' must be a list");
    std::vector<Number> entries;
    entries.reserve(value.size());
    for (const Json& v : value) entries.push_back(number_from_json(v, backend));
    ps = ps.with(*f, std::move(entries));
  }
  return ps;
}

Json to_json(const ArgumentTriple& args) {
  return Json::array({to_json(args.x1), to_json(args.x2), to_json(args.x3)});
}

ArgumentTriple arguments_from_json(const Json& j, Backend backend) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError("args must be a list of three numbers, got " + describe(j));
  }
  return {number_from_json(j[0], backend), number_from_json(j[1], backend),
          number_from_json(j[2], backend)};
}

Json to_json(const Scalars& s) {
  Json out = Json::object();
  if (s.t) out["t"] = to_json(*s.t);
  if (s.r) out["r"] = to_json(*s.r);
  if (s.d) out["d"] = to_json(*s.d);
  return out;
}

Scalars scalars_from_json(const Json& j, Backend backend) {
  require_object(j, "scalars");
  reject_unknown_keys(j, {"t", "r", "d"}, "scalars");
  return {optional_number(j, "t", backend), optional_number(j, "r", backend),
          optional_number(j, "d", backend)};
}

Json to_json(const IdentityInstance& inst) {
  Json out = Json::object();
  out["id"] = std::string(identity_name(inst.id));
  out["params"] = to_json(inst.ps);
  out["i"] = inst.i;
  out["scalars"] = to_json(inst.scalars);
  out["args"] = to_json(inst.args);
  return out;
}

IdentityInstance identity_instance_from_json(IdentityId id, const Json& j, Backend backend) {
  require_object(j, "identity instance");
  reject_unknown_keys(j, {"id", "params", "i", "scalars", "args"}, "identity instance");
  if (!j.contains("args")) throw ParseError("identity instance needs 'args'");
  IdentityInstance inst{.id = id,
                        .ps = parameters_from_json(j.value("params", Json::object()), backend),
                        .i = 1,
                        .scalars = scalars_from_json(j.value("scalars", Json::object()), backend),
                        .args = arguments_from_json(j.at("args"), backend)};
  if (j.contains("i")) {
    const Json& i = j.at("i");
    if (!i.is_number_integer() || i.get<long long>() < 1) {
      throw ParseError("'i' must be a positive integer, got " + describe(i));
    }
    inst.i = i.get<std::size_t>();
  }
  return inst;
}

Json to_json(const SpecialInstance& inst) {
  Json values = Json::object();
  auto names = special_value_names(inst.id);
  for (std::size_t k = 0; k < names.size() && k < inst.values.size(); ++k) {
    values[std::string(names[k])] = to_json(inst.values[k]);
  }
  Json out = Json::object();
  out["id"] = std::string(special_name(inst.id));
  out["values"] = std::move(values);
  out["scalars"] = Json{{"t", to_json(inst.t)}};
  out["args"] = to_json(inst.args);
  return out;
}

SpecialInstance special_instance_from_json(SpecialCaseId id, const Json& j, Backend backend) {
  require_object(j, "special-case instance");
  reject_unknown_keys(j, {"id", "values", "scalars", "args"}, "special-case instance");
  if (!j.contains("values") || !j.contains("args")) {
    throw ParseError("special-case instance needs 'values' and 'args'");
  }
  const Json& values = require_object(j.at("values"), "values");
  SpecialInstance inst{.id = id, .values = {}, .t = Number::zero(backend), .args = {}};
  auto names = special_value_names(id);
  for (const auto& [key, _] : values.items()) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      throw ParseError("unknown value '" + key + "' for " + std::string(special_name(id)));
    }
  }
  for (std::string_view name : names) {
    auto it = values.find(std::string(name));
    if (it == values.end()) throw ParseError("missing value '" + std::string(name) + "'");
    inst.values.push_back(number_from_json(*it, backend));
  }
  Scalars s = scalars_from_json(j.value("scalars", Json::object()), backend);
  if (!s.t) throw ParseError("special-case instance needs scalar 't'");
  inst.t = *s.t;
  inst.args = arguments_from_json(j.at("args"), backend);
  return inst;
}

Json to_json(const EvaluationResult& r) {
  Json out = Json::object();
  out["value"] = to_json(r.value);
  out["shells_used"] = r.shells_used;
  out["converged"] = r.converged;
  out["terminated_exactly"] = r.terminated_exactly;
  out["last_shell_magnitude"] = r.last_shell_magnitude;
  return out;
}

Json to_json(const CheckReport& r) {
  Json out = Json::object();
  out["status"] = std::string(to_string(r.status));
  out["pass"] = r.pass;
  out["lhs"] = to_json(r.lhs);
  out["rhs"] = to_json(r.rhs);
  out["residual"] = r.residual;
  out["lhs_diag"] = to_json(r.lhs_diag);
  out["rhs_diag"] = to_json(r.rhs_diag);
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace f3sum
