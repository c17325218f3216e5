#include "bu/json_io.hpp"

#include "bu/errors.hpp"

#include <limits>

namespace bu {

nlohmann::json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

nlohmann::json integers_to_json(const std::vector<Integer>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(integer_to_json(v));
  return out;
}

RepSpec rep_from_json(const nlohmann::json& json) {
  if (!json.is_object()) throw InvalidInput("representation must be a JSON object");
  for (const char* key : {"p", "k", "exponents"}) {
    if (!json.contains(key)) throw InvalidInput(std::string("representation missing '") + key + "'");
  }
  if (!json["p"].is_number_integer() || !json["k"].is_number_integer()) {
    throw InvalidInput("representation p and k must be integers");
  }
  const auto& exps = json["exponents"];
  if (!exps.is_array()) throw InvalidInput("representation exponents must be an array");
  std::vector<std::int64_t> exponents;
  for (const auto& e : exps) {
    if (!e.is_number_integer()) throw InvalidInput("exponents must be integers");
    exponents.push_back(e.get<std::int64_t>());
  }
  return make_rep(make_group(json["p"].get<std::int64_t>(), json["k"].get<std::int64_t>()),
                  exponents);
}

nlohmann::json rep_to_json(const RepSpec& rep) {
  return {{"p", rep.group().p()}, {"k", rep.group().k()}, {"exponents", rep.exponents()}};
}

}  // namespace bu
