#include <regex>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "supchar/embed.hpp"
#include "supchar/enumerate.hpp"
#include "supchar/error.hpp"
#include "supchar/group_io.hpp"
#include "supchar/group_spec.hpp"
#include "supchar/interchange.hpp"
#include "supchar/iso.hpp"
#include "supchar/lattice.hpp"

using namespace supchar;
using nlohmann::json;

namespace {

// Accepts the DOT subset we emit: a digraph header, attribute, node and edge
// statements, and a closing brace.
bool plausible_dot(const std::string& text, std::size_t nodes, std::size_t edges) {
  std::istringstream in(text);
  std::string line;
  const std::regex header(R"(digraph \w+ \{)");
  const std::regex attr(R"(\s*(rankdir|node|graph|edge)\b.*;)");
  const std::regex node(R"re(\s*n\d+ \[label="[^"]*"\];)re");
  const std::regex edge(R"(\s*n\d+ -> n\d+;)");
  std::getline(in, line);
  if (!std::regex_match(line, header)) return false;
  std::size_t n = 0, e = 0;
  bool closed = false;
  while (std::getline(in, line)) {
    if (closed) return line.empty();
    if (line == "}") {
      closed = true;
    } else if (std::regex_match(line, node)) {
      ++n;
    } else if (std::regex_match(line, edge)) {
      ++e;
    } else if (!std::regex_match(line, attr)) {
      return false;
    }
  }
  return closed && n == nodes && e == edges;
}

}  // namespace

TEST_CASE("theory documents round trip") {
  for (const auto& [name, g] : corpus::small_groups()) {
    auto ctx = TheoryContext::create(g);
    if (ctx->class_count() > 9) continue;
    CAPTURE(name);
    for (const auto& t : all_supercharacter_theories(ctx).theories) {
      auto doc = theory_to_json(t);
      auto back = theory_from_json(ctx, json::parse(doc.dump()));
      CHECK(back == t);
    }
  }
  auto ctx = TheoryContext::create(make_cyclic(4));
  CHECK_THROWS_AS(theory_from_json(ctx, json::parse(R"({"superclasses":[[0],[1],[2,3]]})")),
                  InputError);
  CHECK_THROWS_AS(theory_from_json(ctx, json::parse(R"({"order":5,"superclasses":[[0],[1,2,3]]})")),
                  InputError);
  CHECK_THROWS_AS(theory_from_json(ctx, json::parse(R"({"nothing":1})")), InputError);
}

TEST_CASE("character table documents round trip") {
  for (const auto& [name, g] : corpus::small_groups()) {
    CAPTURE(name);
    auto t = character_table(g);
    auto back = character_table_from_json(json::parse(character_table_to_json(t).dump()));
    CHECK(*back.group == *t.group);
    CHECK(back.chars == t.chars);
    CHECK(back.degrees == t.degrees);
    CHECK(back.conductor == t.conductor);
    CHECK(back.classes == t.classes);
  }
}

TEST_CASE("tsv tables") {
  auto t = character_table(make_cyclic(3));
  auto tsv = character_table_tsv(t);
  std::istringstream in(tsv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), '\t') == 3);
  }
  CHECK(lines == 5);  // header, sizes, three characters
  CHECK(tsv.find("-1-z3") != std::string::npos);

  auto st = supercharacter_table(maximal_sct(TheoryContext::create(make_cyclic(3))));
  CHECK(supercharacter_table_tsv(st).find("-1") != std::string::npos);
  auto doc = supercharacter_table_to_json(st);
  CHECK(doc.at("col_sizes") == json({1, 2}));
}

TEST_CASE("hasse export") {
  for (const auto& g : {make_cyclic(2), dihedral(3), make_cyclic(5), make_cyclic(12)}) {
    auto ts = all_supercharacter_theories(TheoryContext::create(g)).theories;
    auto edges = hasse(ts);
    auto dot = hasse_dot(ts, edges);
    CHECK(plausible_dot(dot, ts.size(), edges.size()));
  }
  auto ts = all_supercharacter_theories(TheoryContext::create(make_cyclic(12))).theories;
  std::set<std::string> digests;
  for (const auto& t : ts) {
    auto d = partition_digest(t);
    CHECK(d.size() == 8);
    digests.insert(d);
  }
  CHECK(digests.size() == ts.size());
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("cyclic 5") == make_cyclic(5));
  const int v4[] = {2, 2};
  CHECK(parse_group_spec("abelian 2 2") == make_abelian(v4));
  CHECK(parse_group_spec("abelian [2,2]") == make_abelian(v4));
  CHECK(parse_group_spec("dihedral 3") == dihedral(3));
  CHECK(parse_group_spec("direct (cyclic 2) (cyclic 3)") ==
        direct_product(make_cyclic(2), make_cyclic(3)));
  CHECK(parse_group_spec("semidirect (cyclic 3) (cyclic 2) inversion") ==
        semidirect_product(inversion_action(make_cyclic(3), make_cyclic(2))));
  CHECK(parse_group_spec("semidirect (cyclic 5) (cyclic 4) unit:2") ==
        semidirect_product(power_action(make_cyclic(5), make_cyclic(4), 2)));
  auto a4 = parse_group_spec("semidirect (abelian [2,2]) (cyclic 3) [[0,1,2,3],[0,2,3,1],[0,3,1,2]]");
  CHECK(a4.order() == 12);
  CHECK(oracle::class_sizes(a4) == std::vector<int>{1, 3, 4, 4});
  CHECK(parse_group_spec("[[0,1],[1,0]]") == make_cyclic(2));
  CHECK(parse_group_spec(group_to_json(dihedral(5)).dump()) == dihedral(5));
  CHECK_THROWS_AS(parse_group_spec(""), InputError);
  CHECK_THROWS_AS(parse_group_spec("cyclic"), InputError);
  CHECK_THROWS_AS(parse_group_spec("cyclic x"), InputError);
  CHECK_THROWS_AS(parse_group_spec("klein 4"), InputError);
  CHECK_THROWS_AS(parse_group_spec("cyclic 3 extra"), InputError);
  CHECK_THROWS_AS(parse_group_spec("[[0,1],[1,1]]"), InputError);
  CHECK_THROWS_AS(parse_group_spec("{not json"), InputError);
  CHECK_THROWS_AS(parse_group_spec("semidirect (dihedral 3) (cyclic 2) trivial"), InputError);
}

TEST_CASE("psi specs") {
  auto c3 = make_cyclic(3), c2 = make_cyclic(2);
  CHECK(parse_psi("inversion", c3, c2).psi == inversion_action(c3, c2).psi);
  CHECK(parse_psi("trivial", c3, c2).psi == trivial_action(c3, c2).psi);
  CHECK(parse_psi("2", c3, c2).psi == inversion_action(c3, c2).psi);
  CHECK(parse_psi("unit:2", c3, c2).psi == inversion_action(c3, c2).psi);
  CHECK(parse_psi("[[0,1,2],[0,2,1]]", c3, c2).psi == inversion_action(c3, c2).psi);
  CHECK_THROWS_AS(parse_psi("[[0,1,2],[0,0,1]]", c3, c2), InputError);
  CHECK_THROWS_AS(parse_psi("[[0,1,2]]", c3, c2), InputError);
  CHECK_THROWS_AS(parse_psi("3", c3, c2), InputError);
  CHECK_THROWS_AS(parse_psi("sideways", c3, c2), InputError);
}

TEST_CASE("reports re-parse") {
  auto result = all_supercharacter_theories(TheoryContext::create(make_cyclic(6)));
  auto doc = json::parse(render(result, Format::kMachine));
  CHECK(doc.at("theories").size() == 7);
  auto text = render(result, Format::kText);
  CHECK(text.find("theories: 7") != std::string::npos);
  auto corollary = verify_dihedral_corollary(3);
  auto cdoc = json::parse(render(corollary, Format::kMachine));
  CHECK(cdoc.at("verdict") == "PASS");
}
