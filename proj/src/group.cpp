#include "supchar/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

namespace {

constexpr std::size_t kMaxAutomorphisms = 1'000'000;

std::string triple_text(int a, int b, int c) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ", " << c << ")";
  return out.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul, std::string label,
                                    std::vector<std::string> element_names) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw InputError("group table is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mul[i].size()) != n) {
      throw InputError("group table row " + std::to_string(i) + " has " +
                       std::to_string(mul[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      if (mul[i][j] < 0 || mul[i][j] >= n) {
        throw InputError("group table entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") = " + std::to_string(mul[i][j]) + " is out of range");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[mul[i][j]]++) {
        throw InputError("group table row " + std::to_string(i) + " repeats element " +
                         std::to_string(mul[i][j]));
      }
      if (col_seen[mul[j][i]]++) {
        throw InputError("group table column " + std::to_string(i) + " repeats element " +
                         std::to_string(mul[j][i]));
      }
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = mul[e][g] == g && mul[g][e] == g;
    if (ok) identity = e;
  }
  if (identity < 0) throw InputError("group table has no identity element");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = mul[a][b];
      for (int c = 0; c < n; ++c) {
        if (mul[ab][c] != mul[a][mul[b][c]]) {
          throw InputError("group table is not associative at triple " + triple_text(a, b, c));
        }
      }
    }
  }

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.table_.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mul) g.table_.insert(g.table_.end(), row.begin(), row.end());
  g.inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul[a][b] == identity) g.inverse_[a] = b;
    }
  }
  g.label_ = std::move(label);
  if (element_names.empty()) {
    for (int i = 0; i < n; ++i) element_names.push_back(std::to_string(i));
  } else if (static_cast<int>(element_names.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " element names, got " +
                     std::to_string(element_names.size()));
  }
  g.names_ = std::move(element_names);
  return g;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> rows(order_);
  for (int a = 0; a < order_; ++a) {
    rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
                   table_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
  }
  return rows;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int g = 0; g < order_; ++g) e = std::lcm(e, element_order(g));
  return e;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

// ---------------------------------------------------------------------------

Automorphism Automorphism::identity(int order) {
  Automorphism a;
  a.perm.resize(order);
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

Automorphism operator*(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.perm.resize(b.perm.size());
  for (std::size_t g = 0; g < b.perm.size(); ++g) c.perm[g] = a.perm[b.perm[g]];
  return c;
}

Automorphism Automorphism::inverse() const {
  Automorphism a;
  a.perm.resize(perm.size());
  for (std::size_t g = 0; g < perm.size(); ++g) a.perm[perm[g]] = static_cast<int>(g);
  return a;
}

bool Automorphism::is_automorphism_of(const FiniteGroup& g) const {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]++) return false;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be at least 1");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(mul), "C" + std::to_string(n));
}

FiniteGroup make_abelian(std::span<const int> invariant_factors) {
  for (int f : invariant_factors) {
    if (f < 2) throw InputError("abelian invariant factors must be at least 2");
  }
  if (invariant_factors.empty()) return FiniteGroup::from_table({{0}}, "C1");
  long order = 1;
  for (int f : invariant_factors) {
    order *= f;
    if (order > 1'000'000) throw LimitError("abelian group order too large");
  }
  const int n = static_cast<int>(order);
  const std::size_t r = invariant_factors.size();
  std::vector<std::vector<int>> digits(n, std::vector<int>(r));
  for (int idx = 0; idx < n; ++idx) {
    int rest = idx;
    for (std::size_t j = r; j-- > 0;) {
      digits[idx][j] = rest % invariant_factors[j];
      rest /= invariant_factors[j];
    }
  }
  auto index_of = [&](const std::vector<int>& d) {
    int idx = 0;
    for (std::size_t j = 0; j < r; ++j) idx = idx * invariant_factors[j] + d[j];
    return idx;
  };
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> sum(r);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (std::size_t j = 0; j < r; ++j) {
        sum[j] = (digits[a][j] + digits[b][j]) % invariant_factors[j];
      }
      mul[a][b] = index_of(sum);
    }
  }
  std::string label;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < r; ++j) {
    label += (j ? "xC" : "C") + std::to_string(invariant_factors[j]);
  }
  for (int a = 0; a < n; ++a) {
    std::string name;
    for (std::size_t j = 0; j < r; ++j) name += (j ? "," : "") + std::to_string(digits[a][j]);
    names.push_back(r == 1 ? name : "(" + name + ")");
  }
  return FiniteGroup::from_table(std::move(mul), std::move(label), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order();
  const int n = ng * nh;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = "(" + g.element_names()[a / nh] + "," + h.element_names()[a % nh] + ")";
    for (int b = 0; b < n; ++b) {
      mul[a][b] = g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
    }
  }
  return FiniteGroup::from_table(std::move(mul), g.label() + "x" + h.label(), std::move(names));
}

FiniteGroup dihedral(int m) {
  if (m < 3) throw InputError("dihedral(m) requires m >= 3, got " + std::to_string(m));
  auto spec = inversion_action(make_cyclic(m), make_cyclic(2));
  FiniteGroup d = semidirect_product(spec);
  auto table = d.table();
  return FiniteGroup::from_table(std::move(table), "D" + std::to_string(2 * m),
                                 d.element_names());
}

// ---------------------------------------------------------------------------

ClassData conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return conjugacy_classes(g, order);
}

ClassData conjugacy_classes(const FiniteGroup& g, std::span<const int> scan_order) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> found;
  for (int x : scan_order) {
    if (label[x] >= 0) continue;
    const int id = static_cast<int>(found.size());
    std::vector<int> cls;
    for (int y = 0; y < n; ++y) {
      int c = g.conjugate(y, x);
      if (label[c] < 0) {
        label[c] = id;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    found.push_back(std::move(cls));
  }
  if (std::count(label.begin(), label.end(), -1) != 0) {
    throw InputError("scan order does not cover every element");
  }
  const int e = g.identity();
  std::sort(found.begin(), found.end(), [e](const auto& a, const auto& b) {
    bool ae = a.front() == e || (a.size() == 1 && a[0] == e);
    bool be = b.front() == e || (b.size() == 1 && b[0] == e);
    if (ae != be) return ae;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  ClassData data;
  data.class_of.assign(n, 0);
  for (int c = 0; c < static_cast<int>(found.size()); ++c) {
    for (int x : found[c]) data.class_of[x] = c;
    data.class_sizes.push_back(static_cast<int>(found[c].size()));
  }
  data.classes = std::move(found);
  return data;
}

// ---------------------------------------------------------------------------

std::vector<int> generated_subgroup(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::vector<int> orders(g.order());
  for (int x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return orders[a] > orders[b]; });
  std::vector<int> gens;
  std::vector<int> current{g.identity()};
  for (int x : by_order) {
    if (static_cast<int>(current.size()) == g.order()) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

std::vector<Automorphism> automorphism_group(const FiniteGroup& g, int order_bound) {
  const int n = g.order();
  if (n > order_bound) {
    throw LimitError("automorphism search refused: group order " + std::to_string(n) +
                     " exceeds bound " + std::to_string(order_bound));
  }
  const auto gens = greedy_generators(g);
  std::vector<int> orders(n);
  for (int x = 0; x < n; ++x) orders[x] = g.element_order(x);

  std::vector<Automorphism> result;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  image[g.identity()] = g.identity();
  used[g.identity()] = 1;

  // Extends the partial map from <gens[0..depth)> to <gens[0..depth]> given
  // the image of gens[depth]. Records newly assigned elements for undo.
  auto extend = [&](std::size_t depth, std::vector<int>& assigned) {
    std::vector<int> frontier;
    for (int x = 0; x < n; ++x) {
      if (image[x] >= 0) frontier.push_back(x);
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const int x = frontier[i];
      for (std::size_t j = 0; j <= depth; ++j) {
        const int y = g.mul(x, gens[j]);
        const int fy = g.mul(image[x], image[gens[j]]);
        if (image[y] < 0) {
          if (used[fy]) return false;
          image[y] = fy;
          used[fy] = 1;
          assigned.push_back(y);
          frontier.push_back(y);
        } else if (image[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == gens.size()) {
      result.push_back(Automorphism{image});
      if (result.size() > kMaxAutomorphisms) {
        throw LimitError("automorphism group too large to enumerate");
      }
      return;
    }
    const int s = gens[depth];
    for (int t = 0; t < n; ++t) {
      if (orders[t] != orders[s] || used[t]) continue;
      std::vector<int> assigned{s};
      image[s] = t;
      used[t] = 1;
      if (extend(depth, assigned)) search(depth + 1);
      for (int x : assigned) {
        used[image[x]] = 0;
        image[x] = -1;
      }
    }
  };
  if (gens.empty()) {
    result.push_back(Automorphism::identity(n));
  } else {
    search(0);
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_closed_under_composition(std::span<const Automorphism> autos) {
  std::set<Automorphism> members(autos.begin(), autos.end());
  for (const auto& a : autos) {
    for (const auto& b : autos) {
      if (!members.count(a * b)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

void SemidirectSpec::validate() const {
  if (!h.is_abelian()) throw InputError("semidirect spec: H (" + h.label() + ") is not abelian");
  if (!k.is_abelian()) throw InputError("semidirect spec: K (" + k.label() + ") is not abelian");
  if (static_cast<int>(psi.size()) != k.order()) {
    throw InputError("semidirect spec: psi must give one automorphism per element of K");
  }
  for (int a = 0; a < k.order(); ++a) {
    if (!psi[a].is_automorphism_of(h)) {
      throw InputError("semidirect spec: psi(" + std::to_string(a) +
                       ") is not an automorphism of H");
    }
  }
  if (psi[k.identity()] != Automorphism::identity(h.order())) {
    throw InputError("semidirect spec: psi(e_K) is not the identity automorphism");
  }
  for (int a = 0; a < k.order(); ++a) {
    for (int b = 0; b < k.order(); ++b) {
      if (psi[k.mul(a, b)] != psi[a] * psi[b]) {
        throw InputError("semidirect spec: psi is not a homomorphism at (" + std::to_string(a) +
                         ", " + std::to_string(b) + ")");
      }
    }
  }
}

SemidirectSpec trivial_action(const FiniteGroup& h, const FiniteGroup& k) {
  return SemidirectSpec{h, k, std::vector<Automorphism>(k.order(), Automorphism::identity(h.order()))};
}

SemidirectSpec power_action(const FiniteGroup& h, const FiniteGroup& k, long unit) {
  if (!(k == make_cyclic(k.order()))) {
    throw InputError("power action requires K to be cyclic in residue order");
  }
  const long e = h.exponent();
  long u = ((unit % e) + e) % e;
  if (std::gcd(u, e) != 1) {
    throw InputError("unit " + std::to_string(unit) + " is not coprime to exp(H) = " +
                     std::to_string(e));
  }
  auto power = [&](int x, long p) {
    int y = h.identity();
    for (long i = 0; i < p; ++i) y = h.mul(y, x);
    return y;
  };
  std::vector<Automorphism> psi;
  long exponent = 1 % e;
  for (int i = 0; i < k.order(); ++i) {
    Automorphism a;
    a.perm.resize(h.order());
    for (int x = 0; x < h.order(); ++x) a.perm[x] = power(x, exponent);
    psi.push_back(std::move(a));
    exponent = (exponent * u) % e;
  }
  if (exponent != 1 % e) {
    throw InputError("unit " + std::to_string(unit) + " does not satisfy unit^|K| = 1 mod " +
                     std::to_string(e));
  }
  SemidirectSpec spec{h, k, std::move(psi)};
  spec.validate();
  return spec;
}

SemidirectSpec inversion_action(const FiniteGroup& h, const FiniteGroup& k) {
  return power_action(h, k, -1);
}

FiniteGroup semidirect_product(const SemidirectSpec& spec) {
  spec.validate();
  const auto& h = spec.h;
  const auto& k = spec.k;
  const int nk = k.order();
  const int n = h.order() * nk;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    const int h1 = a / nk, k1 = a % nk;
    names[a] = "(" + h.element_names()[h1] + "," + k.element_names()[k1] + ")";
    for (int b = 0; b < n; ++b) {
      const int h2 = b / nk, k2 = b % nk;
      mul[a][b] = h.mul(h1, spec.psi[k1](h2)) * nk + k.mul(k1, k2);
    }
  }
  return FiniteGroup::from_table(std::move(mul), h.label() + ":" + k.label(), std::move(names));
}

}  // namespace supchar
