#pragma once

#include <json.hpp>

#include "intreg/automata.hpp"
#include "intreg/encoding.hpp"
#include "intreg/engine.hpp"
#include "intreg/problems.hpp"
#include "intreg/reps.hpp"

namespace intreg::io {

using nlohmann::json;

// Numbers up to 2^53 as JSON numbers, larger ones as decimal strings.
json nat_to_json(const Nat& n);
Nat nat_from_json(const json& j);

json nfa_to_json(const Nfa& m);
// Throws std::invalid_argument on malformed input.
Nfa nfa_from_json(const json& j);

json graph_to_json(const GraphInstance& inst);
json red_blue_to_json(const RedBlueInstance& inst);
GraphInstance graph_from_json(const json& j);
RedBlueInstance red_blue_from_json(const json& j);

json certificate_to_json(const std::optional<Certificate>& c);
json verdict_to_json(const Verdict& v);
json rep_to_json(const RepFunction& rep);
json core_to_json(const FiniteCore& core);
json decision_to_json(const Decision& d, const ProblemSpec& p);
json registry_to_json();

}  // namespace intreg::io
