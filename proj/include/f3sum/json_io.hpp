#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "f3sum/f3.hpp"
#include "f3sum/identities.hpp"
#include "f3sum/number.hpp"
#include "f3sum/params.hpp"
#include "f3sum/special.hpp"

namespace f3sum {

using Json = nlohmann::ordered_json;

/// Rationals become "p/q" (or "p") strings, floats stay JSON numbers.
Json to_json(const Number& x);

/// Accepts JSON numbers and numeric strings. In the rational backend a JSON
/// number is read through its shortest decimal form, so 0.05 becomes 1/20.
Number number_from_json(const Json& j, Backend backend);

Json to_json(const ParameterSet& ps);
/// Object with any of the fourteen family keys; unknown keys are a ParseError.
ParameterSet parameters_from_json(const Json& j, Backend backend);

Json to_json(const ArgumentTriple& args);
ArgumentTriple arguments_from_json(const Json& j, Backend backend);

Json to_json(const Scalars& s);
Scalars scalars_from_json(const Json& j, Backend backend);

/// {"params": {...}, "i": 1, "scalars": {"t": ...}, "args": [x1, x2, x3]}
Json to_json(const IdentityInstance& inst);
IdentityInstance identity_instance_from_json(IdentityId id, const Json& j, Backend backend);

/// {"values": {"a": ..., "b1": ...}, "scalars": {"t": ...}, "args": [x1, x2, x3]}
struct SpecialInstance {
  SpecialCaseId id;
  std::vector<Number> values;
  Number t;
  ArgumentTriple args;
};
Json to_json(const SpecialInstance& inst);
SpecialInstance special_instance_from_json(SpecialCaseId id, const Json& j, Backend backend);

Json to_json(const EvaluationResult& r);
Json to_json(const CheckReport& r);

/// Parses text, mapping JSON syntax errors to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace f3sum
