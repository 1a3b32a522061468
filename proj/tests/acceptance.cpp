// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "corpus.hpp"
#include "oracles.hpp"
#include "supchar/embed.hpp"
#include "supchar/enumerate.hpp"
#include "supchar/error.hpp"
#include "supchar/iso.hpp"
#include "supchar/lattice.hpp"

using namespace supchar;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

using Criterion = std::function<void(Check&)>;

int failures = 0;

void run(int number, const std::string& title, double budget_seconds, const Criterion& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const TheoremViolation& e) {
    c.ok = false;
    c.note << "theorem violation: " << e.what();
  } catch (const std::exception& e) {
    c.ok = false;
    c.note << "error: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    if (c.ok) c.note << "over time budget of " << budget_seconds << " s";
    c.ok = false;
  }
  failures += !c.ok;
  std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", number, c.ok ? "PASS" : "FAIL", title.c_str(),
              secs, c.note.str().empty() ? "" : "  -- ", c.note.str().c_str());
  std::fflush(stdout);
}

std::vector<SemidirectSpec> theorem_specs() {
  auto c = [](int n) { return make_cyclic(n); };
  return {inversion_action(c(3), c(2)), inversion_action(c(5), c(2)), inversion_action(c(7), c(2)),
          inversion_action(c(9), c(2)), power_action(c(5), c(4), 2)};
}

bool some_bijection_verifies(const SupercharacterTheory& a, const SupercharacterTheory& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (verify_isomorphism(a, b, p).ok()) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

int main() {
  run(1, "character tables satisfy both orthogonality relations exactly", 10, [](Check& c) {
    for (const auto& [name, g] : corpus::small_groups()) {
      auto t = character_table(g);
      c.expect(rows_orthonormal(t), name + ": row orthogonality");
      c.expect(columns_orthogonal(t), name + ": column orthogonality");
    }
  });

  run(2, "minimal and maximal theories validate; non-closed C4 partition rejected", 10,
      [](Check& c) {
        for (const auto& [name, g] : corpus::small_groups()) {
          auto ctx = TheoryContext::create(g);
          auto lo = validate(ctx, minimal_sct(ctx).class_parts());
          auto hi = validate(ctx, maximal_sct(ctx).class_parts());
          c.expect(std::holds_alternative<SupercharacterTheory>(lo), name + ": minimal rejected");
          c.expect(std::holds_alternative<SupercharacterTheory>(hi), name + ": maximal rejected");
        }
        auto c4 = TheoryContext::create(make_cyclic(4));
        auto r = validate(c4, {{0}, {1}, {2, 3}});
        auto* rej = std::get_if<Rejection>(&r);
        c.expect(rej && rej->condition == "closure" && !rej->witness.empty(),
                 "C4 {{e},{g},{g^2,g^3}} not rejected with a closure witness");
      });

  run(3, "enumeration counts agree with the raw-convolution oracle", 30, [](Check& c) {
    struct Case {
      const char* name;
      FiniteGroup g;
      std::size_t expected;
    };
    const Case cases[] = {{"C2", make_cyclic(2), 1}, {"C3", make_cyclic(3), 2},
                          {"C5", make_cyclic(5), 3}, {"C7", make_cyclic(7), 4},
                          {"D6", dihedral(3), 2}};
    for (const auto& [name, g, expected] : cases) {
      const auto oracle_count = oracle::closed_class_partitions(g).size();
      auto ctx = TheoryContext::create(g);
      const auto base = all_supercharacter_theories(ctx).theories.size();
      const auto fast = all_supercharacter_theories(ctx, {13, 4, true}).theories.size();
      c.expect(oracle_count == expected, std::string(name) + ": oracle count");
      c.expect(base == oracle_count && fast == oracle_count, std::string(name) + ": enumerated count");
    }
  });

  run(4, "minimal theory of each semidirect product embeds in the direct product", 60,
      [](Check& c) {
        for (const auto& spec : theorem_specs()) {
          auto r = embed_minimal_sct(spec);
          const std::string name = r.semidirect->group().label();
          c.expect(r.match.equivalent, name + ": tables not equivalent");
          c.expect(r.natural_verdict.ok() && r.certified_verdict.ok(), name + ": isomorphism checks");
          c.expect(r.natural_verdict.sizes_preserved, name + ": superclass sizes");
        }
      });

  run(5, "dihedral theories match cyclic theories for m = 3, 5, 7", 300, [](Check& c) {
    for (int m : {3, 5, 7}) {
      auto r = verify_dihedral_corollary(m, {14, 4, true});
      const std::string name = "m=" + std::to_string(m);
      c.expect(r.pass && r.unmatched.empty(), name + ": unmatched dihedral theory");
      c.expect(r.pairs.size() == r.dihedral_theories.size(), name + ": pairing incomplete");
      for (const auto& p : r.pairs) {
        auto v = verify_isomorphism(r.dihedral_theories[p.dihedral_index],
                                    r.cyclic_theories[p.cyclic_index], p.certificate.col_perm);
        c.expect(p.certificate.equivalent && v.ok(), name + ": certificate does not re-verify");
      }
    }
  });

  run(6, "table equivalence agrees with exhaustive isomorphism search", 120, [](Check& c) {
    std::vector<SupercharacterTheory> pool;
    for (const auto& [name, g] : corpus::small_groups()) {
      auto ctx = TheoryContext::create(g);
      for (auto& t : all_supercharacter_theories(ctx, {13, 4, true}).theories) {
        if (t.size() <= 6) pool.push_back(std::move(t));
      }
    }
    int pairs = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) {
        if (pool[i].size() != pool[j].size() || pool[i].group().order() != pool[j].group().order()) {
          continue;
        }
        ++pairs;
        bool table = tables_equivalent(supercharacter_table(pool[i]), supercharacter_table(pool[j]))
                         .equivalent;
        c.expect(table == some_bijection_verifies(pool[i], pool[j]),
                 pool[i].group().label() + " vs " + pool[j].group().label() + ": deciders disagree");
      }
    }
    c.expect(pairs > 0, "no pairs compared");
  });

  run(7, "lattice axioms on C6, C8, D6", 30, [](Check& c) {
    for (const auto& g : {make_cyclic(6), make_cyclic(8), dihedral(3)}) {
      auto ctx = TheoryContext::create(g);
      auto ts = all_supercharacter_theories(ctx).theories;
      const std::string name = g.label();
      auto lo = minimal_sct(ctx), hi = maximal_sct(ctx);
      for (const auto& a : ts) {
        c.expect(join(a, a) == a && meet(a, a) == a, name + ": idempotence");
        c.expect(is_coarser(lo, a) && is_coarser(a, hi), name + ": bottom/top");
        for (const auto& b : ts) {
          c.expect(join(a, b) == join(b, a) && meet(a, b) == meet(b, a), name + ": commutativity");
          c.expect(join(a, meet(a, b)) == a && meet(a, join(a, b)) == a, name + ": absorption");
        }
      }
      auto bottom = std::all_of(ts.begin(), ts.end(), [&](const auto& t) { return is_coarser(lo, t); });
      c.expect(bottom && std::find(ts.begin(), ts.end(), lo) != ts.end(), name + ": minimal is bottom");
      c.expect(std::find(ts.begin(), ts.end(), hi) != ts.end(), name + ": maximal is top");
    }
  });

  run(8, "orbit theory of im(psi) refines the embedded theory", 60, [](Check& c) {
    auto specs = theorem_specs();
    for (const auto& spec : specs) {
      auto o = psi_orbit_sct(spec);
      c.expect(is_coarser(o.orbit, o.embedded), spec.h.label() + ": not coarser");
    }
    c.expect(psi_orbit_sct(specs[0]).strictly_coarser, "(C3,C2,inv) not strict");
    auto same = psi_orbit_sct(trivial_action(make_cyclic(3), make_cyclic(2)));
    c.expect(!same.strictly_coarser && same.orbit == same.embedded, "trivial psi not equal");
  });

  run(9, "sct enumerate output is identical for --jobs 1 and --jobs 4 on C12", 60, [](Check& c) {
    auto one = cli::run("sct enumerate " + cli::quote("cyclic 12") + " --jobs 1");
    auto four = cli::run("sct enumerate " + cli::quote("cyclic 12") + " --jobs 4");
    c.expect(one.status == 0 && four.status == 0, "nonzero exit");
    c.expect(!one.out.empty() && one.out == four.out, "outputs differ");
  });

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
