#include "supchar/character.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "supchar/error.hpp"

namespace supchar {

namespace {

using Mask = std::uint64_t;

Mask mask_of(std::span<const int> elements) {
  Mask m = 0;
  for (int x : elements) m |= Mask{1} << x;
  return m;
}

std::vector<int> elements_of(Mask m, int n) {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (m >> x & 1) out.push_back(x);
  }
  return out;
}

// Homomorphisms S -> Z/N, written additively (value v means zeta_N^v).
// elements lists S; entries of the result are indexed by group element.
std::vector<std::vector<int>> linear_characters(const FiniteGroup& g, std::span<const int> elements,
                                                int conductor) {
  const int n = g.order();
  std::vector<int> by_order(elements.begin(), elements.end());
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<int> current{g.identity()};
  for (int x : by_order) {
    if (current.size() == elements.size()) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = generated_subgroup(g, gens);
  }

  std::vector<std::vector<int>> result;
  std::vector<int> value(n, -1);
  value[g.identity()] = 0;

  auto extend = [&](std::size_t depth, std::vector<int>& assigned) {
    std::vector<int> frontier;
    for (int x = 0; x < n; ++x) {
      if (value[x] >= 0) frontier.push_back(x);
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int x = frontier[i];
      for (std::size_t j = 0; j <= depth; ++j) {
        const int y = g.mul(x, gens[j]);
        const int vy = (value[x] + value[gens[j]]) % conductor;
        if (value[y] < 0) {
          value[y] = vy;
          assigned.push_back(y);
          frontier.push_back(y);
        } else if (value[y] != vy) {
          return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      result.push_back(value);
      return;
    }
    const int s = gens[depth];
    const int step = conductor / g.element_order(s);
    for (int v = 0; v < conductor; v += step) {
      std::vector<int> assigned{s};
      value[s] = v;
      if (extend(depth, assigned)) self(self, depth + 1);
      for (int x : assigned) value[x] = -1;
    }
  };
  search(search, 0);
  return result;
}

class SubgroupSource {
 public:
  explicit SubgroupSource(const FiniteGroup& g) : g_(g) {}

  // Subgroups in phases: G itself, then cyclic subgroups, then every subgroup,
  // larger subgroups first within a phase. Each subgroup is produced once.
  std::vector<Mask> next_phase() {
    std::vector<Mask> out;
    const int n = g_.order();
    if (phase_ == 0) {
      std::vector<int> all(n);
      for (int x = 0; x < n; ++x) all[x] = x;
      out.push_back(mask_of(all));
    } else if (phase_ == 1) {
      for (int x = 0; x < n; ++x) {
        int gen[] = {x};
        cyclic_.push_back({mask_of(generated_subgroup(g_, gen)), x});
      }
      for (const auto& [m, x] : cyclic_) out.push_back(m);
    } else if (phase_ == 2) {
      std::vector<Mask> all;
      std::set<Mask> seen;
      for (const auto& [m, x] : cyclic_) {
        if (seen.insert(m).second) all.push_back(m);
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (const auto& [m, x] : cyclic_) {
          if ((all[i] & m) == m) continue;
          auto gens = elements_of(all[i], n);
          gens.push_back(x);
          Mask joined = mask_of(generated_subgroup(g_, gens));
          if (seen.insert(joined).second) all.push_back(joined);
        }
      }
      out = std::move(all);
    }
    ++phase_;
    std::vector<Mask> fresh;
    for (Mask m : out) {
      if (emitted_.insert(m).second) fresh.push_back(m);
    }
    std::stable_sort(fresh.begin(), fresh.end(), [](Mask a, Mask b) {
      return __builtin_popcountll(a) > __builtin_popcountll(b);
    });
    return fresh;
  }

  bool exhausted() const { return phase_ > 2; }

 private:
  const FiniteGroup& g_;
  int phase_ = 0;
  std::vector<std::pair<Mask, int>> cyclic_;
  std::set<Mask> emitted_;
};

bool trivial_row(const ClassFunction& row) {
  for (const auto& v : row) {
    if (!(v == Cyclotomic(1))) return false;
  }
  return true;
}

}  // namespace

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const FiniteGroup& g,
                         const ClassData& classes) {
  Cyclotomic sum;
  for (int c = 0; c < classes.count(); ++c) {
    sum += a[c] * b[c].conj() * Rational(classes.class_sizes[c]);
  }
  return sum / Rational(g.order());
}

ClassFunction regular_character(const FiniteGroup& g, const ClassData& classes) {
  ClassFunction reg(classes.count(), Cyclotomic(0));
  reg[0] = Cyclotomic(g.order());
  return reg;
}

CharacterTable character_table(const FiniteGroup& g) {
  const int n = g.order();
  if (n > 64) {
    throw LimitError("character tables are limited to groups of order <= 64, got " +
                     std::to_string(n));
  }
  CharacterTable table;
  table.group = std::make_shared<const FiniteGroup>(g);
  table.classes = conjugacy_classes(g);
  table.conductor = g.exponent();
  const auto& classes = table.classes;
  const int k = classes.count();
  const int conductor = table.conductor;

  std::set<ClassFunction> found;
  SubgroupSource source(g);
  while (static_cast<int>(found.size()) < k && !source.exhausted()) {
    for (Mask subgroup : source.next_phase()) {
      if (static_cast<int>(found.size()) == k) break;
      const auto elements = elements_of(subgroup, n);
      const int s = static_cast<int>(elements.size());
      for (const auto& lambda : linear_characters(g, elements, conductor)) {
        // Ind(g) = |C_G(g)|/|S| * sum over y in cl(g) & S of lambda(y)
        ClassFunction induced(k);
        for (int c = 0; c < k; ++c) {
          std::vector<long> counts(conductor, 0);
          for (int y : classes.classes[c]) {
            if (subgroup >> y & 1) ++counts[lambda[y]];
          }
          induced[c] = Cyclotomic::from_exponent_counts(conductor, counts) *
                       ratio(n / classes.class_sizes[c], s);
        }
        if (found.count(induced)) continue;
        if (!(inner_product(induced, induced, g, classes) == Cyclotomic(1))) continue;
        found.insert(std::move(induced));
        if (static_cast<int>(found.size()) == k) break;
      }
    }
  }
  if (static_cast<int>(found.size()) != k) {
    throw InputError("character table of " + g.label() +
                     " is not reachable by inducing linear characters (found " +
                     std::to_string(found.size()) + " of " + std::to_string(k) + " irreducibles)");
  }

  std::vector<std::pair<int, ClassFunction>> rows;
  for (const auto& row : found) {
    auto degree = row[0].as_rational();
    if (!degree || degree->get_den() != 1) {
      throw TheoremViolation("irreducible character with non-integral degree");
    }
    rows.emplace_back(static_cast<int>(degree->get_num().get_si()), row);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    bool ta = trivial_row(a.second), tb = trivial_row(b.second);
    if (ta != tb) return ta;
    return a.second < b.second;
  });
  long degree_squares = 0;
  for (auto& [d, row] : rows) {
    degree_squares += static_cast<long>(d) * d;
    table.degrees.push_back(d);
    table.chars.push_back(std::move(row));
  }
  if (degree_squares != n) {
    throw TheoremViolation("character degrees do not satisfy sum of squares = |G| for " + g.label());
  }
  table.trivial_index = 0;
  return table;
}

bool rows_orthonormal(const CharacterTable& table) {
  const auto& g = *table.group;
  for (int i = 0; i < table.size(); ++i) {
    for (int j = 0; j < table.size(); ++j) {
      Cyclotomic expected(i == j ? 1 : 0);
      if (!(inner_product(table.chars[i], table.chars[j], g, table.classes) == expected)) {
        return false;
      }
    }
  }
  return true;
}

bool columns_orthogonal(const CharacterTable& table) {
  const int k = table.classes.count();
  const int n = table.group->order();
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      Cyclotomic sum;
      for (int i = 0; i < table.size(); ++i) sum += table.chars[i][c] * table.chars[i][d].conj();
      Cyclotomic expected = c == d ? Cyclotomic(ratio(n, table.classes.class_sizes[c])) : Cyclotomic(0);
      if (!(sum == expected)) return false;
    }
  }
  return true;
}

CentralIdempotent central_idempotent(const CharacterTable& table, int row) {
  if (row < 0 || row >= table.size()) throw InputError("character row out of range");
  const auto& g = *table.group;
  CentralIdempotent e;
  e.coords.reserve(g.order());
  const Rational scale = ratio(table.degrees[row], g.order());
  for (int x = 0; x < g.order(); ++x) e.coords.push_back(table.value(row, x).conj() * scale);
  for (auto& c : e.coords) c = c.lifted(table.conductor);
  return e;
}

AlgebraElement convolve(const FiniteGroup& g, const AlgebraElement& a, const AlgebraElement& b) {
  const int n = g.order();
  AlgebraElement out(n, Cyclotomic(0));
  for (int x = 0; x < n; ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < n; ++y) {
      if (b[y].is_zero()) continue;
      out[g.mul(x, y)] += a[x] * b[y];
    }
  }
  return out;
}

}  // namespace supchar
