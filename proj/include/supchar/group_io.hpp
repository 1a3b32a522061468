#pragma once

#include <string>

#include "json.hpp"
#include "supchar/group.hpp"

namespace supchar {

// Group interchange document: {label, order, mul, element_names}.
nlohmann::json group_to_json(const FiniteGroup& g);
// Validates every group axiom; throws InputError.
FiniteGroup group_from_json(const nlohmann::json& doc);

}  // namespace supchar
