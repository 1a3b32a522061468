#include <algorithm>
#include <array>
#include <numeric>

#include "corpus.hpp"
#include "doctest.h"
#include "supchar/character.hpp"
#include "supchar/error.hpp"

using namespace supchar;

namespace {

using Mat = std::array<int, 4>;

FiniteGroup sl2_f3() {
  std::vector<Mat> elems;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, d});
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Mat& x = elems[i];
      const Mat& y = elems[j];
      Mat z = {(x[0] * y[0] + x[1] * y[2]) % 3, (x[0] * y[1] + x[1] * y[3]) % 3,
               (x[2] * y[0] + x[3] * y[2]) % 3, (x[2] * y[1] + x[3] * y[3]) % 3};
      mul[i][j] = static_cast<int>(std::find(elems.begin(), elems.end(), z) - elems.begin());
    }
  }
  return FiniteGroup::from_table(mul, "SL(2,3)");
}

}  // namespace

TEST_CASE("small tables") {
  auto c3 = character_table(make_cyclic(3));
  REQUIRE(c3.size() == 3);
  CHECK(c3.chars[0] == ClassFunction{1, 1, 1});
  CHECK(c3.conductor == 3);
  auto w = Cyclotomic::zeta(3);
  bool found = false;
  for (const auto& row : c3.chars) found = found || row == ClassFunction{1, w * w, w};
  CHECK(found);

  auto d6 = character_table(dihedral(3));
  CHECK(d6.degrees == std::vector<int>{1, 1, 2});
  const auto& two = d6.chars[2];
  for (int c = 0; c < d6.classes.count(); ++c) {
    int size = d6.classes.class_sizes[c];
    Cyclotomic expected = size == 1 ? 2 : size == 2 ? -1 : 0;
    CHECK(two[c] == expected);
  }
  auto f20 = character_table(semidirect_product(power_action(make_cyclic(5), make_cyclic(4), 2)));
  CHECK(f20.degrees == std::vector<int>{1, 1, 1, 1, 4});
}

TEST_CASE("orthogonality and degrees across the corpus") {
  for (const auto& [name, g] : corpus::small_groups()) {
    CAPTURE(name);
    auto t = character_table(g);
    CHECK(t.size() == t.classes.count());
    CHECK(t.trivial_index == 0);
    CHECK(rows_orthonormal(t));
    CHECK(columns_orthogonal(t));
    long sq = 0;
    for (int d : t.degrees) sq += static_cast<long>(d) * d;
    CHECK(sq == g.order());
    CHECK(std::is_sorted(t.degrees.begin(), t.degrees.end()));
    for (int r = 0; r < t.size(); ++r) {
      CHECK(g.order() % t.degrees[r] == 0);
      CHECK(t.chars[r][0] == Cyclotomic(t.degrees[r]));
      for (int x = 0; x < g.order(); ++x) CHECK(t.value(r, g.inv(x)) == t.value(r, x).conj());
    }
    auto reg = regular_character(g, t.classes);
    for (int r = 0; r < t.size(); ++r) {
      CHECK(inner_product(reg, t.chars[r], g, t.classes) == Cyclotomic(t.degrees[r]));
    }
  }
}

TEST_CASE("abelian tables are the dual group") {
  const int v4[] = {2, 2};
  for (const auto& g : {make_cyclic(6), make_abelian(v4), make_cyclic(8)}) {
    auto t = character_table(g);
    CHECK(t.size() == g.order());
    for (int r = 0; r < t.size(); ++r) {
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
          CHECK(t.value(r, g.mul(a, b)) == t.value(r, a) * t.value(r, b));
        }
      }
    }
    // pointwise products of rows are rows
    for (int r = 0; r < t.size(); ++r) {
      for (int s = 0; s < t.size(); ++s) {
        ClassFunction prod(t.classes.count());
        for (int c = 0; c < t.classes.count(); ++c) prod[c] = t.chars[r][c] * t.chars[s][c];
        CHECK(std::find(t.chars.begin(), t.chars.end(), prod) != t.chars.end());
      }
    }
  }
}

TEST_CASE("central idempotents") {
  for (const auto& [name, g] : corpus::small_groups()) {
    if (g.order() > 12) continue;
    CAPTURE(name);
    auto t = character_table(g);
    std::vector<AlgebraElement> e;
    for (int r = 0; r < t.size(); ++r) e.push_back(central_idempotent(t, r).coords);
    AlgebraElement total(g.order());
    for (int r = 0; r < t.size(); ++r) {
      for (int s = 0; s < t.size(); ++s) {
        auto prod = convolve(g, e[r], e[s]);
        if (r == s) {
          CHECK(prod == e[r]);
        } else {
          CHECK(std::all_of(prod.begin(), prod.end(), [](const Cyclotomic& x) { return x.is_zero(); }));
        }
      }
      for (int x = 0; x < g.order(); ++x) total[x] += e[r][x];
    }
    AlgebraElement delta(g.order());
    delta[g.identity()] = 1;
    CHECK(total == delta);
    // e_chi = chi(1)/|G| sum conj(chi(g)) g
    for (int r = 0; r < t.size(); ++r) {
      for (int x = 0; x < g.order(); ++x) {
        CHECK(e[r][x] == t.value(r, x).conj() * ratio(t.degrees[r], g.order()));
      }
    }
  }
}

TEST_CASE("non-monomial groups are refused") {
  auto g = sl2_f3();
  CHECK(g.order() == 24);
  CHECK_THROWS_AS(character_table(g), InputError);
  CHECK_THROWS_AS(character_table(make_cyclic(65)), LimitError);
}
