#include "supchar/group_io.hpp"

#include "supchar/error.hpp"

namespace supchar {

nlohmann::json group_to_json(const FiniteGroup& g) {
  nlohmann::json doc;
  doc["label"] = g.label();
  doc["order"] = g.order();
  doc["mul"] = g.table();
  doc["element_names"] = g.element_names();
  return doc;
}

FiniteGroup group_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("mul")) {
      throw InputError("group document must be an object with a 'mul' table");
    }
    auto mul = doc.at("mul").get<std::vector<std::vector<int>>>();
    if (doc.contains("order") && doc.at("order").get<int>() != static_cast<int>(mul.size())) {
      throw InputError("group document: 'order' does not match the table size");
    }
    std::string label = doc.value("label", std::string("G"));
    std::vector<std::string> names;
    if (doc.contains("element_names")) names = doc.at("element_names").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(mul), std::move(label), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group document: ") + e.what());
  }
}

}  // namespace supchar
