// supchar: character tables, supercharacter theories, and the semidirect
// product embedding checks from the command line.
//
// Exit status: 0 success/PASS, 1 negative verdict, 2 input error or refused
// limit, 3 theorem violation (an implementation bug).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "supchar/embed.hpp"
#include "supchar/enumerate.hpp"
#include "supchar/error.hpp"
#include "supchar/group_spec.hpp"
#include "supchar/interchange.hpp"
#include "supchar/iso.hpp"
#include "supchar/lattice.hpp"

namespace {

using namespace supchar;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitTheorem = 3;

// Enough classes for the cyclic group of order 14.
constexpr int kCorollaryDefaultLimit = 14;

struct Options {
  int jobs = 1;
  int limit_classes = 0;  // 0: command default
  std::string format = "text";
  std::string prune = "off";
};

Format format_of(const Options& o) { return o.format == "machine" ? Format::kMachine : Format::kText; }

EnumerationOptions enumeration_options(const Options& o, int default_limit) {
  EnumerationOptions e;
  e.jobs = o.jobs;
  e.limit_classes = o.limit_classes > 0 ? o.limit_classes : default_limit;
  e.prune = o.prune == "on";
  return e;
}

class Timer {
 public:
  explicit Timer(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    std::cerr << what_ << ": " << ms.count() << " ms\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_chartab(const std::string& spec, const Options& o) {
  auto table = character_table(parse_group_spec(spec));
  if (format_of(o) == Format::kMachine) {
    std::cout << character_table_to_json(table).dump(2) << "\n";
  } else {
    std::cout << character_table_tsv(table);
  }
  return 0;
}

int run_enumerate(const std::string& spec, const Options& o) {
  auto ctx = TheoryContext::create(parse_group_spec(spec));
  auto result = all_supercharacter_theories(ctx, enumeration_options(o, EnumerationOptions{}.limit_classes));
  std::cout << render(result, format_of(o));
  return 0;
}

int run_lattice(const std::string& spec, const Options& o) {
  auto ctx = TheoryContext::create(parse_group_spec(spec));
  auto result = all_supercharacter_theories(ctx, enumeration_options(o, EnumerationOptions{}.limit_classes));
  std::cout << hasse_dot(result.theories, hasse(result.theories));
  return 0;
}

int run_table(const std::string& spec, const std::string& theory_file, int index, const Options& o) {
  auto ctx = TheoryContext::create(parse_group_spec(spec));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(theory_file));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("theory file is not valid JSON: ") + e.what());
  }
  if (doc.contains("theories")) {
    if (index < 0 || index >= static_cast<int>(doc["theories"].size())) {
      throw InputError("theory index out of range");
    }
    doc = doc["theories"][index];
  }
  auto theory = theory_from_json(ctx, doc);
  auto table = supercharacter_table(theory);
  if (format_of(o) == Format::kMachine) {
    nlohmann::json out = theory_to_json(theory);
    out["table"] = supercharacter_table_to_json(table);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_theory(theory) << "\n" << supercharacter_table_tsv(table);
  }
  return 0;
}

SemidirectSpec spec_from(const std::string& h, const std::string& k, const std::string& psi) {
  return parse_psi(psi, parse_group_spec(h), parse_group_spec(k));
}

int run_embed(const std::string& h, const std::string& k, const std::string& psi, const Options& o) {
  Timer timer("embed");
  auto report = embed_minimal_sct(spec_from(h, k, psi));
  auto orbit = psi_orbit_sct(report);
  std::cout << render(report, orbit, format_of(o));
  return 0;
}

int run_bijection(const std::string& h, const std::string& k, const std::string& psi, const Options& o) {
  Timer timer("verify-bijection");
  auto report = verify_bijection(spec_from(h, k, psi), enumeration_options(o, EnumerationOptions{}.limit_classes));
  std::cout << render(report, format_of(o));
  return report.pass ? 0 : kExitFail;
}

int run_corollary(int m, const Options& o) {
  Timer timer("verify-corollary");
  auto report = verify_dihedral_corollary(m, enumeration_options(o, kCorollaryDefaultLimit));
  std::cout << render(report, format_of(o));
  return report.pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercharacter theories of small finite groups"};
  app.require_subcommand(1);
  Options opts;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", opts.jobs, "Enumeration worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--limit-classes", opts.limit_classes, "Refuse enumeration above this many classes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--prune", opts.prune, "Prune the enumeration early")->check(CLI::IsMember({"off", "on"}));
  };

  std::string group, group2, psi, theory_file;
  int index = 0, m = 0;
  std::function<int()> action;

  auto* chartab = app.add_subcommand("chartab", "Print the character table of a group");
  chartab->add_option("group", group, "Group spec")->required();
  add_common(chartab);
  chartab->callback([&] { action = [&] { return run_chartab(group, opts); }; });

  auto* sct = app.add_subcommand("sct", "Supercharacter theories of a group");
  sct->require_subcommand(1);
  auto* enumerate = sct->add_subcommand("enumerate", "List every supercharacter theory");
  enumerate->add_option("group", group, "Group spec")->required();
  add_common(enumerate);
  enumerate->callback([&] { action = [&] { return run_enumerate(group, opts); }; });
  auto* lattice = sct->add_subcommand("lattice", "Hasse diagram of the theories in DOT format");
  lattice->add_option("group", group, "Group spec")->required();
  add_common(lattice);
  lattice->callback([&] { action = [&] { return run_lattice(group, opts); }; });
  auto* table = sct->add_subcommand("table", "Supercharacter table of a theory");
  table->add_option("group", group, "Group spec")->required();
  table->add_option("theory", theory_file, "Theory file (JSON)")->required();
  table->add_option("--index", index, "Theory index when the file holds a list");
  add_common(table);
  table->callback([&] { action = [&] { return run_table(group, theory_file, index, opts); }; });

  auto* embed = app.add_subcommand("embed", "Embed the minimal theory of H x| K into H x K");
  embed->add_option("H", group, "Abelian group H")->required();
  embed->add_option("K", group2, "Abelian group K")->required();
  embed->add_option("psi", psi, "Action of K on H")->required();
  add_common(embed);
  embed->callback([&] { action = [&] { return run_embed(group, group2, psi, opts); }; });

  auto* bijection = app.add_subcommand("verify-bijection", "Match theories of H x| K with theories of H x K");
  bijection->add_option("H", group, "Abelian group H")->required();
  bijection->add_option("K", group2, "Abelian group K")->required();
  bijection->add_option("psi", psi, "Action of K on H")->required();
  add_common(bijection);
  bijection->callback([&] { action = [&] { return run_bijection(group, group2, psi, opts); }; });

  auto* corollary = app.add_subcommand("verify-corollary", "Match dihedral theories with cyclic ones");
  corollary->add_option("m", m, "Odd m; the groups have order 2m")->required();
  add_common(corollary);
  corollary->callback([&] { action = [&] { return run_corollary(m, opts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action();
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitTheorem;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
