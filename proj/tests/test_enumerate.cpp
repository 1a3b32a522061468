#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "supchar/enumerate.hpp"
#include "supchar/error.hpp"
#include "supchar/lattice.hpp"

using namespace supchar;

namespace {

oracle::Parts sorted_superclasses(const SupercharacterTheory& t) {
  auto parts = t.superclasses();
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::set<oracle::Parts> as_set(const std::vector<SupercharacterTheory>& ts) {
  std::set<oracle::Parts> out;
  for (const auto& t : ts) out.insert(sorted_superclasses(t));
  return out;
}

// Subgroups of Aut(C_p) = (Z/p)^*, which is cyclic: one per divisor d of p-1.
std::vector<std::vector<Automorphism>> unit_subgroups(int p) {
  int gen = 2;
  for (; gen < p; ++gen) {
    int x = 1, ord = 0;
    do {
      x = x * gen % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) break;
  }
  if (p == 2) gen = 1;
  std::vector<std::vector<Automorphism>> out;
  for (int d = 1; d <= p - 1; ++d) {
    if ((p - 1) % d != 0) continue;
    int step = 1;
    for (int i = 0; i < (p - 1) / d; ++i) step = step * gen % p;
    std::vector<Automorphism> sub;
    int u = 1;
    for (int i = 0; i < d; ++i) {
      Automorphism a{std::vector<int>(p)};
      for (int x = 0; x < p; ++x) a.perm[x] = x * u % p;
      sub.push_back(a);
      u = u * step % p;
    }
    std::sort(sub.begin(), sub.end());
    out.push_back(sub);
  }
  return out;
}

}  // namespace

TEST_CASE("counts") {
  auto count = [](const FiniteGroup& g) {
    return all_supercharacter_theories(TheoryContext::create(g)).theories.size();
  };
  CHECK(count(make_cyclic(1)) == 1);
  CHECK(count(make_cyclic(2)) == 1);
  CHECK(count(make_cyclic(3)) == 2);
  CHECK(count(make_cyclic(5)) == 3);
  CHECK(count(make_cyclic(7)) == 4);
  CHECK(count(dihedral(3)) == 2);
}

TEST_CASE("enumeration matches the convolution oracle") {
  for (const auto& [name, g] : corpus::small_groups()) {
    auto ctx = TheoryContext::create(g);
    if (ctx->class_count() > 9) continue;
    CAPTURE(name);
    auto result = all_supercharacter_theories(ctx);
    CHECK(as_set(result.theories) == oracle::closed_class_partitions(g));
    CHECK(result.theories.size() == result.accepted);
    CHECK(result.candidates == bell_number(ctx->class_count() - 1));
    CHECK(std::find(result.theories.begin(), result.theories.end(), minimal_sct(ctx)) !=
          result.theories.end());
    CHECK(std::find(result.theories.begin(), result.theories.end(), maximal_sct(ctx)) !=
          result.theories.end());
    std::set<std::vector<int>> codes;
    for (const auto& t : result.theories) codes.insert(t.encoding());
    CHECK(codes.size() == result.theories.size());
  }
}

TEST_CASE("prime cyclic groups follow the automorphism subgroups") {
  for (int p : {3, 5, 7, 11}) {
    CAPTURE(p);
    auto ctx = TheoryContext::create(make_cyclic(p));
    auto theories = all_supercharacter_theories(ctx).theories;
    CHECK(static_cast<int>(theories.size()) == oracle::divisor_count(p - 1));
    std::set<oracle::Parts> from_aut;
    for (const auto& sub : unit_subgroups(p)) {
      from_aut.insert(sorted_superclasses(from_automorphisms(ctx, sub)));
    }
    CHECK(as_set(theories) == from_aut);
  }
}

TEST_CASE("parallel and pruned runs agree with the baseline") {
  const int v4[] = {2, 2};
  for (const auto& g : {make_cyclic(12), make_cyclic(8), dihedral(5), make_abelian(v4),
                        semidirect_product(power_action(make_cyclic(5), make_cyclic(4), 2))}) {
    CAPTURE(g.label());
    auto ctx = TheoryContext::create(g);
    auto base = all_supercharacter_theories(ctx);
    for (int jobs : {1, 2, 4, 7}) {
      for (bool prune : {false, true}) {
        auto other = all_supercharacter_theories(ctx, {13, jobs, prune});
        CHECK(other.theories == base.theories);
        if (!prune) CHECK(other.candidates == base.candidates);
      }
    }
  }
}

TEST_CASE("ordering is by size then encoding") {
  auto theories = all_supercharacter_theories(TheoryContext::create(make_cyclic(12))).theories;
  CHECK(theories.size() == 32);
  for (std::size_t i = 1; i < theories.size(); ++i) {
    const auto& a = theories[i - 1];
    const auto& b = theories[i];
    CHECK((a.size() > b.size() || (a.size() == b.size() && a.encoding() < b.encoding())));
  }
  CHECK(theories.back().size() == 2);
}

TEST_CASE("class limit") {
  auto ctx = TheoryContext::create(make_cyclic(14));
  try {
    all_supercharacter_theories(ctx);
    FAIL("limit not enforced");
  } catch (const LimitError& e) {
    CHECK(std::string(e.what()).find(std::to_string(bell_number(13))) != std::string::npos);
  }
  CHECK(all_supercharacter_theories(ctx, {14, 1, true}).theories.size() == 13);
}

TEST_CASE("bell numbers") {
  const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(bell_number(n) == expected[n]);
  CHECK(bell_number(12) == 4213597);
}

TEST_CASE("enumerated sets are closed under join and meet") {
  for (const auto& [name, g] : corpus::small_groups()) {
    auto ctx = TheoryContext::create(g);
    if (ctx->class_count() > 6) continue;
    CAPTURE(name);
    auto ts = all_supercharacter_theories(ctx).theories;
    for (const auto& a : ts) {
      for (const auto& b : ts) {
        CHECK(std::find(ts.begin(), ts.end(), join(a, b)) != ts.end());
        CHECK(std::find(ts.begin(), ts.end(), meet(a, b)) != ts.end());
      }
    }
  }
}
