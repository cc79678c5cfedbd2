#pragma once

#include <string>

#include "json.hpp"
#include "twc/cech.hpp"

namespace twc::io {

using json = nlohmann::ordered_json;

// Parse errors and missing files throw ValidationError("InvalidInput").
json read_json_file(const std::string& path);

// A built-in name or a path to {"label", "order", "mul"}. Throws BudgetExceeded
// when the order is above max_order.
GroupPtr load_group(const std::string& ref, int max_order = 64);
GroupPtr group_from_json(const json& j, int max_order = 64);

// "triv", "inv", "outer" (Q8 only), "conj:<x>", or a file holding {"theta": [[int]]}.
GammaAction load_action(const GroupPtr& gamma, const GroupPtr& g, const std::string& ref);
// "triv", "cQ" (the unique central involution on the square of the C2 generator),
// or a file holding {"c": [[int]]}.
TwistedData load_cocycle(const GammaAction& act, const std::string& ref);
// {"gamma": group-ref, "g": group-ref, "theta": [[int]], "c": [[int]]}
TwistedData load_twisted_data(const std::string& path, int max_order = 64);

// A fixture name or {"vertices", "simplices"} with optional {"gamma", "act"}.
GammaNerve load_space(const std::string& ref, int max_order = 64);

// {"a": {"i-j": int}, "phi": {"γ": [int per vertex]}}
json cocycle_json(const GammaNerve& x, const TwistedCocycle& c);

}  // namespace twc::io
