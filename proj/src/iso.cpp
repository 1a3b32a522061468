#include "supchar/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

SupercharacterTable supercharacter_table(const SupercharacterTheory& theory) {
  const auto& ctx = *theory.context();
  const auto& table = ctx.table();
  SupercharacterTable out;
  out.row_parts = theory.char_parts();
  out.col_parts = theory.class_parts();
  out.col_sizes = theory.superclass_sizes();
  out.conductor = table.conductor;
  for (const auto& xpart : theory.char_parts()) {
    std::vector<Cyclotomic> row;
    for (const auto& kpart : theory.class_parts()) {
      Cyclotomic first;
      for (std::size_t idx = 0; idx < kpart.size(); ++idx) {
        Cyclotomic sigma(Rational(0), table.conductor);
        for (int r : xpart) sigma += table.chars[r][kpart[idx]] * Rational(table.degrees[r]);
        if (idx == 0) {
          first = std::move(sigma);
        } else if (!(sigma == first)) {
          throw TheoremViolation("supercharacter not constant on superclass of a validated theory");
        }
      }
      row.push_back(std::move(first));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

namespace {

// Integer matrices of value ids shared between the two tables.
struct Encoded {
  std::vector<std::vector<int>> a, b;
  std::vector<Cyclotomic> values;
};

Encoded encode(const SupercharacterTable& first, const SupercharacterTable& second) {
  const int conductor = std::lcm(first.conductor, second.conductor);
  std::map<Cyclotomic, int> ids;
  auto lift_all = [&](const SupercharacterTable& t) {
    std::vector<std::vector<Cyclotomic>> lifted;
    for (const auto& row : t.entries) {
      std::vector<Cyclotomic> r;
      for (const auto& v : row) {
        r.push_back(v.lifted(conductor));
        ids.emplace(r.back(), 0);
      }
      lifted.push_back(std::move(r));
    }
    return lifted;
  };
  auto la = lift_all(first), lb = lift_all(second);
  Encoded e;
  for (auto& [v, id] : ids) {
    id = static_cast<int>(e.values.size());
    e.values.push_back(v);
  }
  auto to_ids = [&](const auto& lifted) {
    std::vector<std::vector<int>> m;
    for (const auto& row : lifted) {
      std::vector<int> r;
      for (const auto& v : row) r.push_back(ids.at(v));
      m.push_back(std::move(r));
    }
    return m;
  };
  e.a = to_ids(la);
  e.b = to_ids(lb);
  return e;
}

// Joint colour refinement of rows and columns of both tables.
struct Colouring {
  std::vector<int> row[2], col[2];
};

Colouring refine(const std::vector<std::vector<int>>* m[2], const std::vector<int>* sizes[2]) {
  const int n = static_cast<int>(m[0]->size());
  Colouring c;
  std::map<int, int> size_ids;
  for (int t = 0; t < 2; ++t) {
    for (int s : *sizes[t]) size_ids.emplace(s, 0);
  }
  int next = 0;
  for (auto& [s, id] : size_ids) id = next++;
  for (int t = 0; t < 2; ++t) {
    c.row[t].assign(n, 0);
    c.col[t].clear();
    for (int s : *sizes[t]) c.col[t].push_back(size_ids[s]);
  }
  auto count_colours = [&](const Colouring& x) {
    std::vector<int> all;
    for (int t = 0; t < 2; ++t) {
      all.insert(all.end(), x.row[t].begin(), x.row[t].end());
    }
    std::sort(all.begin(), all.end());
    int rows = static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
    all.clear();
    for (int t = 0; t < 2; ++t) all.insert(all.end(), x.col[t].begin(), x.col[t].end());
    std::sort(all.begin(), all.end());
    return rows + static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
  };
  int colours = count_colours(c);
  while (true) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::map<Sig, int> row_sigs, col_sigs;
    std::vector<Sig> rs[2], cs[2];
    for (int t = 0; t < 2; ++t) {
      const auto& mat = *m[t];
      for (int i = 0; i < n; ++i) {
        Sig s{c.row[t][i], {}};
        for (int j = 0; j < n; ++j) s.second.emplace_back(mat[i][j], c.col[t][j]);
        std::sort(s.second.begin(), s.second.end());
        row_sigs.emplace(s, 0);
        rs[t].push_back(std::move(s));
      }
      for (int j = 0; j < n; ++j) {
        Sig s{c.col[t][j], {}};
        for (int i = 0; i < n; ++i) s.second.emplace_back(mat[i][j], c.row[t][i]);
        std::sort(s.second.begin(), s.second.end());
        col_sigs.emplace(s, 0);
        cs[t].push_back(std::move(s));
      }
    }
    int id = 0;
    for (auto& [s, v] : row_sigs) v = id++;
    id = 0;
    for (auto& [s, v] : col_sigs) v = id++;
    Colouring nc;
    for (int t = 0; t < 2; ++t) {
      for (const auto& s : rs[t]) nc.row[t].push_back(row_sigs[s]);
      for (const auto& s : cs[t]) nc.col[t].push_back(col_sigs[s]);
    }
    const int nc_count = count_colours(nc);
    c = std::move(nc);
    if (nc_count == colours) break;
    colours = nc_count;
  }
  return c;
}

bool same_histogram(const std::vector<int>& x, const std::vector<int>& y) {
  auto a = x, b = y;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Perfect matching of columns under the allowed relation; fills match.
bool column_matching(const std::vector<std::vector<char>>& allowed, std::vector<int>& match) {
  const int n = static_cast<int>(allowed.size());
  std::vector<int> owner(n, -1);
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    auto augment = [&](auto&& self, int col) -> bool {
      for (int t = 0; t < n; ++t) {
        if (!allowed[col][t] || seen[t]) continue;
        seen[t] = 1;
        if (owner[t] < 0 || self(self, owner[t])) {
          owner[t] = col;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, j)) return false;
  }
  match.assign(n, -1);
  for (int t = 0; t < n; ++t) match[owner[t]] = t;
  return true;
}

std::string signature_text(const SupercharacterTable& t, int col) {
  std::vector<Cyclotomic> values;
  for (const auto& row : t.entries) values.push_back(row[col]);
  std::sort(values.begin(), values.end());
  std::ostringstream out;
  out << "size " << t.col_sizes[col] << " values [";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].to_string();
  out << "]";
  return out.str();
}

}  // namespace

TableMatch tables_equivalent(const SupercharacterTable& first, const SupercharacterTable& second) {
  TableMatch match;
  const int n = first.size();
  if (n != second.size()) {
    match.witness = "dimension " + std::to_string(n) + " vs " + std::to_string(second.size());
    return match;
  }
  const Encoded enc = encode(first, second);
  const std::vector<std::vector<int>>* mats[2] = {&enc.a, &enc.b};
  const std::vector<int>* sizes[2] = {&first.col_sizes, &second.col_sizes};
  const Colouring colour = refine(mats, sizes);
  if (!same_histogram(colour.col[0], colour.col[1]) ||
      !same_histogram(colour.row[0], colour.row[1])) {
    // Name a column of the first table whose colour class is over-represented.
    std::string detail = "refined row/column signatures differ";
    for (int j = 0; j < n; ++j) {
      int ca = static_cast<int>(std::count(colour.col[0].begin(), colour.col[0].end(), colour.col[0][j]));
      int cb = static_cast<int>(std::count(colour.col[1].begin(), colour.col[1].end(), colour.col[0][j]));
      if (ca != cb) {
        detail = "column signature (" + signature_text(first, j) + ") occurs " + std::to_string(ca) +
                 " time(s) in the first table and " + std::to_string(cb) + " in the second";
        break;
      }
    }
    match.witness = detail;
    return match;
  }

  std::vector<std::vector<char>> allowed(n, std::vector<char>(n, 0));
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < n; ++t) allowed[j][t] = colour.col[0][j] == colour.col[1][t];
  }
  std::vector<int> row_map(n, -1);
  std::vector<char> row_used(n, 0);
  std::vector<int> col_map;

  auto search = [&](auto&& self, int i, const std::vector<std::vector<char>>& cols) -> bool {
    std::vector<int> scratch;
    if (!column_matching(cols, scratch)) return false;
    if (i == n) {
      col_map = std::move(scratch);
      return true;
    }
    for (int r = 0; r < n; ++r) {
      if (row_used[r] || colour.row[0][i] != colour.row[1][r]) continue;
      auto next = cols;
      for (int j = 0; j < n; ++j) {
        for (int t = 0; t < n; ++t) {
          if (next[j][t] && enc.a[i][j] != enc.b[r][t]) next[j][t] = 0;
        }
      }
      row_used[r] = 1;
      row_map[i] = r;
      if (self(self, i + 1, next)) return true;
      row_used[r] = 0;
      row_map[i] = -1;
    }
    return false;
  };
  if (!search(search, 0, allowed)) {
    match.witness = "signatures agree but no consistent row/column permutation exists";
    return match;
  }
  match.equivalent = true;
  match.row_perm = row_map;
  match.col_perm = col_map;
  auto identity_column = [](const SupercharacterTable& t) {
    for (int j = 0; j < t.size(); ++j) {
      if (t.col_parts[j] == std::vector<int>{0}) return j;
    }
    return -1;
  };
  const int e1 = identity_column(first), e2 = identity_column(second);
  if (e1 >= 0 && e2 >= 0 && match.col_perm[e1] != e2) {
    throw TheoremViolation("table equivalence moved the identity superclass column");
  }
  for (int j = 0; j < n; ++j) {
    if (first.col_sizes[j] != second.col_sizes[match.col_perm[j]]) {
      throw TheoremViolation("table equivalence does not preserve superclass sizes");
    }
  }
  return match;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::vector<long>>> superclass_structure_constants(
    const SupercharacterTheory& theory) {
  const auto& ctx = *theory.context();
  const auto& parts = theory.class_parts();
  const int m = theory.size();
  std::vector<std::vector<std::vector<long>>> c(
      m, std::vector<std::vector<long>>(m, std::vector<long>(m, 0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        long sum = 0;
        for (int a : parts[i]) {
          for (int b : parts[j]) sum += ctx.structure_constant(a, b, parts[k].front());
        }
        c[i][j][k] = sum;
      }
    }
  }
  return c;
}

IsomorphismVerdict verify_isomorphism(const SupercharacterTheory& a, const SupercharacterTheory& b,
                                      std::span<const int> part_map) {
  const int m = a.size();
  if (static_cast<int>(part_map.size()) != m || b.size() != m) {
    throw InputError("superclass map must be a bijection between parts of equal-size theories");
  }
  std::vector<char> hit(m, 0);
  for (int t : part_map) {
    if (t < 0 || t >= m || hit[t]++) throw InputError("superclass map is not a bijection");
  }
  IsomorphismVerdict v;

  const auto sa = a.superclass_sizes(), sb = b.superclass_sizes();
  for (int i = 0; i < m; ++i) {
    if (sa[i] != sb[part_map[i]]) {
      v.sizes_preserved = false;
      v.failures.push_back("size: superclass " + std::to_string(i) + " has " + std::to_string(sa[i]) +
                           " elements, image " + std::to_string(part_map[i]) + " has " +
                           std::to_string(sb[part_map[i]]));
    }
  }

  const auto ca = superclass_structure_constants(a), cb = superclass_structure_constants(b);
  for (int i = 0; i < m && v.structure_constants_preserved; ++i) {
    for (int j = 0; j < m && v.structure_constants_preserved; ++j) {
      for (int k = 0; k < m; ++k) {
        if (ca[i][j][k] != cb[part_map[i]][part_map[j]][part_map[k]]) {
          v.structure_constants_preserved = false;
          v.failures.push_back("structure constant: K" + std::to_string(i) + "*K" + std::to_string(j) +
                               " has coefficient " + std::to_string(ca[i][j][k]) + " on K" +
                               std::to_string(k) + " but the image has " +
                               std::to_string(cb[part_map[i]][part_map[j]][part_map[k]]));
          break;
        }
      }
    }
  }

  // Superclass sums are disjoint 0/1 vectors on both sides, so any bijection
  // of parts carries K_i^ o K_j^ = delta_ij K_i^ to the same relation.
  v.hadamard_preserved = true;

  // E_X = sum_K E_X(rep K) K^; transport coefficients and look for E_Y.
  auto coefficients = [](const SupercharacterTheory& t) {
    std::vector<std::vector<Cyclotomic>> out;
    const auto supers = t.superclasses();
    for (const auto& e : t.idempotent_sums()) {
      std::vector<Cyclotomic> row;
      for (const auto& part : supers) row.push_back(e[part.front()]);
      out.push_back(std::move(row));
    }
    return out;
  };
  const auto ea = coefficients(a), eb = coefficients(b);
  v.idempotent_map.assign(m, -1);
  for (int x = 0; x < m; ++x) {
    std::vector<Cyclotomic> transported(m);
    for (int k = 0; k < m; ++k) transported[part_map[k]] = ea[x][k];
    for (int y = 0; y < m; ++y) {
      if (eb[y] == transported) {
        v.idempotent_map[x] = y;
        break;
      }
    }
    if (v.idempotent_map[x] < 0) {
      v.idempotents_matched = false;
      v.failures.push_back("idempotent: E_X for supercharacter " + std::to_string(x) +
                           " maps to no E_Y");
    }
  }
  return v;
}

}  // namespace supchar
