#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "supchar/embed.hpp"
#include "supchar/enumerate.hpp"
#include "supchar/iso.hpp"
#include "supchar/sct.hpp"

namespace supchar {

enum class Format { kText, kMachine };

// Character tables: TSV with symbolic entries, and a JSON dump of
// coefficient vectors that re-parses exactly.
std::string character_table_tsv(const CharacterTable& table);
nlohmann::json character_table_to_json(const CharacterTable& table);
CharacterTable character_table_from_json(const nlohmann::json& doc);

// Theory interchange: superclasses as element sets, supercharacters as
// character-row sets, tagged with the group label and order.
nlohmann::json theory_to_json(const SupercharacterTheory& theory);
// Validates against ctx; the supercharacter parts, when present, must match
// the ones the superclasses induce. Throws InputError.
SupercharacterTheory theory_from_json(const ContextPtr& ctx, const nlohmann::json& doc);

std::string supercharacter_table_tsv(const SupercharacterTable& table);
nlohmann::json supercharacter_table_to_json(const SupercharacterTable& table);

// Eight hex digits identifying a partition; stable across platforms.
std::string partition_digest(const SupercharacterTheory& theory);
std::string hasse_dot(const std::vector<SupercharacterTheory>& theories,
                      const std::vector<std::pair<int, int>>& edges);

std::string render_theory(const SupercharacterTheory& theory);
std::string render(const EnumerationResult& result, Format format);
std::string render(const EmbeddingReport& report, const OrbitComparison& orbit, Format format);
std::string render(const BijectionReport& report, Format format);
std::string render(const CorollaryReport& report, Format format);
nlohmann::json match_to_json(const TableMatch& match);

}  // namespace supchar
