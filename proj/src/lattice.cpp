#include "supchar/lattice.hpp"

#include <map>

#include "supchar/error.hpp"
#include "supchar/linalg.hpp"

namespace supchar {

namespace {

linalg::Matrix indicator_rows(const Partition& element_parts, int order) {
  linalg::Matrix rows;
  for (const auto& part : element_parts) {
    linalg::Vector v(order, 0);
    for (int x : part) v[x] = 1;
    rows.push_back(std::move(v));
  }
  return rows;
}

linalg::Matrix rational_rows(const std::vector<std::vector<int>>& sums) {
  linalg::Matrix rows;
  for (const auto& s : sums) rows.emplace_back(s.begin(), s.end());
  return rows;
}

linalg::Vector convolve_rational(const FiniteGroup& g, const linalg::Vector& a,
                                 const linalg::Vector& b) {
  linalg::Vector out(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (a[x] == 0) continue;
    for (int y = 0; y < g.order(); ++y) {
      if (b[y] != 0) out[g.mul(x, y)] += a[x] * b[y];
    }
  }
  return out;
}

void require_same_group(const SupercharacterTheory& a, const SupercharacterTheory& b) {
  if (!(a.group() == b.group())) throw InputError("lattice operation on theories of different groups");
}

SupercharacterTheory theory_from_elements(const SupercharacterTheory& like, const Partition& parts,
                                          const char* op) {
  const auto& ctx = like.context();
  Partition classes;
  try {
    classes = class_partition_from_elements(*ctx, parts);
  } catch (const InputError& e) {
    throw TheoremViolation(std::string(op) + " produced a partition that splits a class: " + e.what());
  }
  return accept_theory(ctx, classes, std::string(op) + " result is not a supercharacter theory");
}

}  // namespace

Partition partition_from_span(const std::vector<std::vector<Rational>>& rows, int order) {
  const auto reduced = linalg::row_reduce(rows);
  std::map<std::vector<Rational>, std::vector<int>> by_column;
  for (int x = 0; x < order; ++x) {
    std::vector<Rational> column;
    column.reserve(reduced.size());
    for (const auto& r : reduced) column.push_back(r[x]);
    by_column[column].push_back(x);
  }
  Partition parts;
  for (auto& [column, members] : by_column) parts.push_back(std::move(members));
  return canonical_partition(std::move(parts));
}

SupercharacterTheory join(const SupercharacterTheory& a, const SupercharacterTheory& b) {
  require_same_group(a, b);
  const int n = a.group().order();
  auto common = linalg::intersect_spans(rational_rows(a.superclass_sums()),
                                        rational_rows(b.superclass_sums()));
  Partition parts = partition_from_span(common, n);
  if (static_cast<int>(parts.size()) != static_cast<int>(common.size())) {
    throw TheoremViolation("intersection of superclass spans is not spanned by a partition");
  }
  return theory_from_elements(a, parts, "join");
}

SupercharacterTheory meet(const SupercharacterTheory& a, const SupercharacterTheory& b) {
  require_same_group(a, b);
  const auto& g = a.group();
  const int n = g.order();
  auto rows = rational_rows(a.superclass_sums());
  auto more = rational_rows(b.superclass_sums());
  rows.insert(rows.end(), more.begin(), more.end());
  Partition parts = partition_from_span(rows, n);
  // Each round can only split parts, so n rounds suffice.
  bool stable = false;
  for (int round = 0; round <= n && !stable; ++round) {
    auto basis = indicator_rows(parts, n);
    auto span = basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        span.push_back(convolve_rational(g, basis[i], basis[j]));
      }
    }
    Partition next = partition_from_span(span, n);
    stable = next == parts;
    parts = std::move(next);
  }
  if (!stable) throw TheoremViolation("meet closure did not stabilise within |G| rounds");
  return theory_from_elements(a, parts, "meet");
}

std::vector<std::pair<int, int>> hasse(const std::vector<SupercharacterTheory>& theories) {
  const int m = static_cast<int>(theories.size());
  std::vector<std::vector<char>> finer(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      finer[i][j] = i != j && is_coarser(theories[i], theories[j]) && !(theories[i] == theories[j]);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!finer[i][j]) continue;
      bool cover = true;
      for (int l = 0; l < m && cover; ++l) cover = !(finer[i][l] && finer[l][j]);
      if (cover) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace supchar
