#include "supchar/interchange.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "supchar/error.hpp"
#include "supchar/group_io.hpp"

namespace supchar {

namespace {

using nlohmann::json;

json coeffs_to_json(const Cyclotomic& v) {
  json out = json::array();
  for (const auto& c : v.coeffs()) out.push_back(to_string(c));
  return out;
}

Cyclotomic coeffs_from_json(const json& doc, int conductor) {
  auto parts = doc.get<std::vector<std::string>>();
  if (static_cast<int>(parts.size()) != euler_phi(conductor)) {
    throw InputError("coefficient vector has the wrong length for conductor " +
                     std::to_string(conductor));
  }
  Cyclotomic sum(Rational(0), conductor);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    sum += Cyclotomic::zeta(conductor, static_cast<long>(i)) * parse_rational(parts[i]);
  }
  return sum;
}

std::string element_set(const FiniteGroup& g, const std::vector<int>& elements) {
  std::string s = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    s += (i ? " " : "") + g.element_names()[elements[i]];
  }
  return s + "}";
}

std::string index_set(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string join_perm(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace

std::string character_table_tsv(const CharacterTable& table) {
  const auto& g = *table.group;
  std::ostringstream out;
  out << "char";
  for (int c = 0; c < table.classes.count(); ++c) {
    out << '\t' << g.element_names()[table.classes.representative(c)];
  }
  out << "\nsize";
  for (int s : table.classes.class_sizes) out << '\t' << s;
  out << '\n';
  for (int i = 0; i < table.size(); ++i) {
    out << "X" << i;
    for (const auto& v : table.chars[i]) out << '\t' << v.to_string();
    out << '\n';
  }
  return out.str();
}

json character_table_to_json(const CharacterTable& table) {
  json doc;
  doc["group"] = group_to_json(*table.group);
  doc["conductor"] = table.conductor;
  doc["classes"] = table.classes.classes;
  doc["degrees"] = table.degrees;
  doc["trivial_index"] = table.trivial_index;
  json rows = json::array();
  for (const auto& row : table.chars) {
    json r = json::array();
    for (const auto& v : row) r.push_back(coeffs_to_json(v.lifted(table.conductor)));
    rows.push_back(std::move(r));
  }
  doc["chars"] = std::move(rows);
  return doc;
}

CharacterTable character_table_from_json(const json& doc) {
  try {
    CharacterTable t;
    t.group = std::make_shared<const FiniteGroup>(group_from_json(doc.at("group")));
    t.classes = conjugacy_classes(*t.group);
    if (doc.at("classes").get<std::vector<std::vector<int>>>() != t.classes.classes) {
      throw InputError("character table classes do not match the group's conjugacy classes");
    }
    t.conductor = doc.at("conductor").get<int>();
    t.degrees = doc.at("degrees").get<std::vector<int>>();
    t.trivial_index = doc.at("trivial_index").get<int>();
    for (const auto& row : doc.at("chars")) {
      ClassFunction r;
      for (const auto& v : row) r.push_back(coeffs_from_json(v, t.conductor));
      if (static_cast<int>(r.size()) != t.classes.count()) throw InputError("character row has wrong length");
      t.chars.push_back(std::move(r));
    }
    if (t.size() != t.classes.count() || static_cast<int>(t.degrees.size()) != t.size()) {
      throw InputError("character table must be square");
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed character table document: ") + e.what());
  }
}

json theory_to_json(const SupercharacterTheory& theory) {
  json doc;
  doc["group"] = theory.group().label();
  doc["order"] = theory.group().order();
  doc["superclasses"] = theory.superclasses();
  doc["supercharacters"] = theory.char_parts();
  return doc;
}

SupercharacterTheory theory_from_json(const ContextPtr& ctx, const json& doc) {
  try {
    const auto& g = ctx->group();
    if (doc.contains("order") && doc.at("order").get<int>() != g.order()) {
      throw InputError("theory document is for a group of order " +
                       std::to_string(doc.at("order").get<int>()) + ", not " + std::to_string(g.order()));
    }
    if (doc.contains("group") && doc.at("group").get<std::string>() != g.label()) {
      throw InputError("theory document names group '" + doc.at("group").get<std::string>() +
                       "', not '" + g.label() + "'");
    }
    auto element_parts = doc.at("superclasses").get<Partition>();
    auto result = validate(ctx, class_partition_from_elements(*ctx, element_parts));
    if (auto* r = std::get_if<Rejection>(&result)) {
      throw InputError("not a supercharacter theory: " + r->condition + " (" + r->witness + ")");
    }
    auto theory = std::get<SupercharacterTheory>(std::move(result));
    if (doc.contains("supercharacters") &&
        canonical_partition(doc.at("supercharacters").get<Partition>()) != theory.char_parts()) {
      throw InputError("supercharacter parts do not match those induced by the superclasses");
    }
    return theory;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed theory document: ") + e.what());
  }
}

std::string supercharacter_table_tsv(const SupercharacterTable& table) {
  std::ostringstream out;
  out << "sigma";
  for (std::size_t j = 0; j < table.col_parts.size(); ++j) out << "\tK" << j;
  out << "\nsize";
  for (int s : table.col_sizes) out << '\t' << s;
  out << '\n';
  for (int i = 0; i < table.size(); ++i) {
    out << index_set(table.row_parts[i]);
    for (const auto& v : table.entries[i]) out << '\t' << v.to_string();
    out << '\n';
  }
  return out.str();
}

json supercharacter_table_to_json(const SupercharacterTable& table) {
  json doc;
  doc["conductor"] = table.conductor;
  doc["row_parts"] = table.row_parts;
  doc["col_parts"] = table.col_parts;
  doc["col_sizes"] = table.col_sizes;
  json rows = json::array();
  for (const auto& row : table.entries) {
    json r = json::array();
    for (const auto& v : row) r.push_back(coeffs_to_json(v.lifted(table.conductor)));
    rows.push_back(std::move(r));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

std::string partition_digest(const SupercharacterTheory& theory) {
  std::uint32_t h = 2166136261u;  // FNV-1a
  for (int label : theory.encoding()) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= static_cast<std::uint32_t>(label >> (8 * byte)) & 0xffu;
      h *= 16777619u;
    }
  }
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", h);
  return buf;
}

std::string hasse_dot(const std::vector<SupercharacterTheory>& theories,
                      const std::vector<std::pair<int, int>>& edges) {
  std::ostringstream out;
  out << "digraph sct_lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < theories.size(); ++i) {
    out << "  n" << i << " [label=\"|K|=" << theories[i].size() << " #"
        << partition_digest(theories[i]) << "\"];\n";
  }
  for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string render_theory(const SupercharacterTheory& theory) {
  std::string s = "K =";
  for (const auto& part : theory.superclasses()) s += " " + element_set(theory.group(), part);
  s += "  X =";
  for (const auto& part : theory.char_parts()) s += " " + index_set(part);
  return s;
}

json match_to_json(const TableMatch& match) {
  json doc;
  doc["equivalent"] = match.equivalent;
  if (match.equivalent) {
    doc["row_perm"] = match.row_perm;
    doc["col_perm"] = match.col_perm;
  } else {
    doc["witness"] = match.witness;
  }
  return doc;
}

std::string render(const EnumerationResult& result, Format format) {
  if (format == Format::kMachine) {
    json doc;
    doc["candidates"] = result.candidates;
    doc["accepted"] = result.accepted;
    json list = json::array();
    for (const auto& t : result.theories) list.push_back(theory_to_json(t));
    doc["theories"] = std::move(list);
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (!result.theories.empty()) out << "group " << result.theories.front().group().label() << "\n";
  out << "candidates tested: " << result.candidates << "\n";
  out << "theories: " << result.accepted << "\n";
  for (std::size_t i = 0; i < result.theories.size(); ++i) {
    out << "[" << i << "] |K|=" << result.theories[i].size() << "  "
        << render_theory(result.theories[i]) << "\n";
  }
  return out.str();
}

std::string render(const EmbeddingReport& report, const OrbitComparison& orbit, Format format) {
  if (format == Format::kMachine) {
    json doc;
    doc["semidirect"] = report.semidirect->group().label();
    doc["direct"] = report.direct->group().label();
    doc["minimal"] = theory_to_json(report.minimal);
    doc["embedded"] = theory_to_json(report.embedded);
    doc["natural_map"] = report.natural_map;
    doc["match"] = match_to_json(report.match);
    doc["isomorphism_verified"] = report.certified_verdict.ok() && report.natural_verdict.ok();
    doc["class_pairs_checked"] = report.class_pairs_checked;
    doc["orbit"] = theory_to_json(orbit.orbit);
    doc["strictly_coarser_than_orbit"] = orbit.strictly_coarser;
    doc["verdict"] = "PASS";
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "semidirect product " << report.semidirect->group().label() << ", direct product "
      << report.direct->group().label() << "\n";
  out << "minimal theory:  " << render_theory(report.minimal) << "\n";
  out << "embedded theory: " << render_theory(report.embedded) << "\n";
  out << "superclass sizes: " << join_perm(report.embedded.superclass_sizes()) << "\n";
  out << "class-sum products equal in both groups: " << report.class_pairs_checked << " pairs\n";
  out << "table equivalence: rows " << join_perm(report.match.row_perm) << " columns "
      << join_perm(report.match.col_perm) << "\n";
  out << "isomorphism checks (sizes, structure constants, idempotents): passed\n";
  out << "im(psi) orbit theory: " << render_theory(orbit.orbit) << "\n";
  out << "embedded theory is " << (orbit.strictly_coarser ? "strictly coarser than" : "equal to")
      << " the orbit theory\n";
  out << "verdict: PASS\n";
  return out.str();
}

std::string render(const BijectionReport& report, Format format) {
  if (format == Format::kMachine) {
    json doc;
    doc["semidirect_count"] = report.semidirect_theories.size();
    doc["coarser_count"] = report.coarser_theories.size();
    json pairs = json::array();
    for (const auto& p : report.pairs) {
      pairs.push_back({{"semidirect", p.semidirect_index},
                       {"direct", p.direct_index},
                       {"certificate", match_to_json(p.certificate)}});
    }
    doc["pairs"] = std::move(pairs);
    doc["problems"] = report.problems;
    doc["verdict"] = report.pass ? "PASS" : "FAIL";
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "theories of the semidirect product: " << report.semidirect_theories.size() << "\n";
  out << "theories of the direct product coarser than A: " << report.coarser_theories.size() << "\n";
  for (const auto& p : report.pairs) {
    out << "  " << p.semidirect_index << " -> " << p.direct_index;
    if (p.certificate.equivalent) {
      out << "  rows " << join_perm(p.certificate.row_perm) << " columns "
          << join_perm(p.certificate.col_perm);
    }
    out << "\n";
  }
  for (const auto& problem : report.problems) out << "problem: " << problem << "\n";
  out << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render(const CorollaryReport& report, Format format) {
  if (format == Format::kMachine) {
    json doc;
    doc["m"] = report.m;
    doc["dihedral_count"] = report.dihedral_theories.size();
    doc["cyclic_count"] = report.cyclic_theories.size();
    json pairs = json::array();
    for (const auto& p : report.pairs) {
      pairs.push_back({{"dihedral", p.dihedral_index},
                       {"cyclic", p.cyclic_index},
                       {"dihedral_theory", theory_to_json(report.dihedral_theories[p.dihedral_index])},
                       {"cyclic_theory", theory_to_json(report.cyclic_theories[p.cyclic_index])},
                       {"certificate", match_to_json(p.certificate)},
                       {"isomorphism_verified", p.verdict.ok()}});
    }
    doc["pairs"] = std::move(pairs);
    doc["unmatched"] = report.unmatched;
    doc["verdict"] = report.pass ? "PASS" : "FAIL";
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "dihedral group of order " << 2 * report.m << ": " << report.dihedral_theories.size()
      << " theories; cyclic group of order " << 2 * report.m << ": "
      << report.cyclic_theories.size() << " theories\n";
  for (const auto& p : report.pairs) {
    out << "  D[" << p.dihedral_index << "] " << render_theory(report.dihedral_theories[p.dihedral_index])
        << "\n    ~ C[" << p.cyclic_index << "] "
        << render_theory(report.cyclic_theories[p.cyclic_index]) << "\n    rows "
        << join_perm(p.certificate.row_perm) << " columns " << join_perm(p.certificate.col_perm)
        << (p.verdict.ok() ? "  isomorphism verified" : "  ISOMORPHISM CHECK FAILED") << "\n";
  }
  for (int i : report.unmatched) {
    out << "  D[" << i << "] unmatched: " << render_theory(report.dihedral_theories[i]) << "\n";
  }
  out << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace supchar
