#pragma once

#include "bu/group_rep.hpp"
#include "bu/integer.hpp"

#include "json.hpp"

#include <vector>

namespace bu {

/// JSON number when the value fits in int64, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& value);
nlohmann::json integers_to_json(const std::vector<Integer>& values);

/// {"p": int, "k": int, "exponents": [int, ...]}
RepSpec rep_from_json(const nlohmann::json& json);
nlohmann::json rep_to_json(const RepSpec& rep);

}  // namespace bu
