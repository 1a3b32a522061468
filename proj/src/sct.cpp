#include "supchar/sct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "supchar/error.hpp"

namespace supchar {

namespace {

std::string set_text(std::span<const int> xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << '}';
  return out.str();
}

std::vector<int> labels_of(const Partition& parts, int n) {
  std::vector<int> label(n, -1);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
    for (int x : parts[p]) label[x] = p;
  }
  return label;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  Partition parts() {
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x) groups[find(x)].push_back(x);
    Partition out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return canonical_partition(std::move(out));
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Partition canonical_partition(Partition parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::erase_if(parts, [](const auto& p) { return p.empty(); });
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

// ---------------------------------------------------------------------------

TheoryContext::TheoryContext(CharacterTable table) : table_(std::move(table)) {
  const auto& g = group();
  const auto& cls = classes();
  k_ = cls.count();
  constants_.assign(static_cast<std::size_t>(k_) * k_ * k_, 0);
  // For x in C_a and target t = rep(C_c), y = x^-1 t is the unique partner.
  for (int a = 0; a < k_; ++a) {
    for (int x : cls.classes[a]) {
      const int xi = g.inv(x);
      for (int c = 0; c < k_; ++c) {
        const int y = g.mul(xi, cls.representative(c));
        ++constants_[(static_cast<std::size_t>(a) * k_ + cls.class_of[y]) * k_ + c];
      }
    }
  }
  central_.resize(table_.size());
  for (int row = 0; row < table_.size(); ++row) {
    const Rational inv_degree = ratio(1, table_.degrees[row]);
    for (int c = 0; c < k_; ++c) {
      central_[row].push_back(table_.chars[row][c] * (inv_degree * cls.class_sizes[c]));
    }
  }
  inverse_class_.resize(k_);
  for (int c = 0; c < k_; ++c) inverse_class_[c] = cls.class_of[g.inv(cls.representative(c))];
}

std::shared_ptr<const TheoryContext> TheoryContext::create(const FiniteGroup& g) {
  return create(character_table(g));
}

std::shared_ptr<const TheoryContext> TheoryContext::create(CharacterTable table) {
  return std::shared_ptr<const TheoryContext>(new TheoryContext(std::move(table)));
}

// ---------------------------------------------------------------------------

Partition SupercharacterTheory::superclasses() const {
  Partition out;
  for (const auto& part : class_parts_) {
    std::vector<int> elements;
    for (int c : part) {
      const auto& cls = ctx_->classes().classes[c];
      elements.insert(elements.end(), cls.begin(), cls.end());
    }
    std::sort(elements.begin(), elements.end());
    out.push_back(std::move(elements));
  }
  return out;
}

std::vector<int> SupercharacterTheory::superclass_sizes() const {
  std::vector<int> sizes;
  for (const auto& part : class_parts_) {
    int s = 0;
    for (int c : part) s += ctx_->classes().class_sizes[c];
    sizes.push_back(s);
  }
  return sizes;
}

bool operator==(const SupercharacterTheory& a, const SupercharacterTheory& b) {
  return a.group() == b.group() && a.class_parts_ == b.class_parts_ &&
         a.char_parts_ == b.char_parts_;
}

// ---------------------------------------------------------------------------

bool product_closed(const TheoryContext& ctx, std::span<const std::vector<int>> parts, int i,
                    int j, std::span<const int> check_parts, ClosureWitness* witness) {
  const int k = ctx.class_count();
  long coeff[64];
  std::vector<long> heap;
  long* out = coeff;
  if (k > 64) {
    heap.assign(k, 0);
    out = heap.data();
  } else {
    std::fill(coeff, coeff + k, 0);
  }
  for (int q : check_parts) {
    const auto& part = parts[q];
    if (part.size() < 2) continue;
    for (int c : part) {
      long sum = 0;
      for (int a : parts[i]) {
        for (int b : parts[j]) sum += ctx.structure_constant(a, b, c);
      }
      out[c] = sum;
    }
    const int c0 = part.front();
    for (int c : part) {
      if (out[c] != out[c0]) {
        if (witness) *witness = ClosureWitness{i, j, q, c0, c, out[c0], out[c]};
        return false;
      }
    }
  }
  return true;
}

bool products_closed(const TheoryContext& ctx, std::span<const std::vector<int>> parts,
                     ClosureWitness* witness) {
  const int m = static_cast<int>(parts.size());
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  // Products with the identity part are trivially closed.
  for (int i = 1; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (!product_closed(ctx, parts, i, j, all, witness)) return false;
    }
  }
  return true;
}

struct TheoryBuilder {
  static SupercharacterTheory build(const ContextPtr& ctx, Partition class_parts,
                                    Partition char_parts) {
    const auto& g = ctx->group();
    const auto& table = ctx->table();
    const auto& cls = ctx->classes();
    SupercharacterTheory t;
    t.ctx_ = ctx;
    t.class_label_ = labels_of(class_parts, cls.count());
    t.char_label_ = labels_of(char_parts, table.size());
    for (const auto& part : class_parts) {
      std::vector<int> indicator(g.order(), 0);
      for (int c : part) {
        for (int x : cls.classes[c]) indicator[x] = 1;
      }
      t.superclass_sums_.push_back(std::move(indicator));
    }
    for (const auto& part : char_parts) {
      // E_X(g) = conj(sigma_X(g)) / |G|
      std::vector<Cyclotomic> per_class(cls.count(), Cyclotomic(Rational(0), table.conductor));
      for (int c = 0; c < cls.count(); ++c) {
        for (int row : part) per_class[c] += table.chars[row][c] * Rational(table.degrees[row]);
        per_class[c] = per_class[c].conj() / Rational(g.order());
      }
      AlgebraElement coords(g.order());
      for (int x = 0; x < g.order(); ++x) coords[x] = per_class[cls.class_of[x]];
      t.idempotent_sums_.push_back(std::move(coords));
    }
    t.class_parts_ = std::move(class_parts);
    t.char_parts_ = std::move(char_parts);
    return t;
  }
};

ValidationResult validate(const ContextPtr& ctx, const Partition& class_partition) {
  const int k = ctx->class_count();
  const auto& table = ctx->table();
  std::vector<int> seen(k, 0);
  for (const auto& part : class_partition) {
    if (part.empty()) return Rejection{"partition", "empty part"};
    for (int c : part) {
      if (c < 0 || c >= k) {
        return Rejection{"partition", "class index " + std::to_string(c) + " out of range"};
      }
      if (seen[c]++) return Rejection{"partition", "class " + std::to_string(c) + " repeated"};
    }
  }
  for (int c = 0; c < k; ++c) {
    if (!seen[c]) return Rejection{"partition", "class " + std::to_string(c) + " not covered"};
  }
  Partition parts = canonical_partition(class_partition);

  // (i) {e} is a superclass
  if (parts[0].size() != 1 || parts[0][0] != 0) {
    return Rejection{"identity", "identity class shares part " + set_text(parts[0])};
  }

  ClosureWitness w;
  if (!products_closed(*ctx, parts, &w)) {
    std::ostringstream out;
    out << "product of parts " << set_text(parts[w.left]) << " and " << set_text(parts[w.right])
        << " has coefficient " << w.coeff_a << " on class " << w.class_a << " but " << w.coeff_b
        << " on class " << w.class_b << " within part " << set_text(parts[w.part]);
    return Rejection{"closure", out.str()};
  }

  // X: characters with equal central-character vectors on every part.
  std::map<std::vector<Cyclotomic>, std::vector<int>> by_vector;
  for (int row = 0; row < table.size(); ++row) {
    std::vector<Cyclotomic> omega;
    omega.reserve(parts.size());
    for (const auto& part : parts) {
      Cyclotomic sum(Rational(0), table.conductor);
      for (int c : part) sum += ctx->central_value(row, c);
      omega.push_back(std::move(sum));
    }
    by_vector[omega].push_back(row);
  }
  Partition char_parts;
  for (auto& [omega, rows] : by_vector) char_parts.push_back(std::move(rows));
  char_parts = canonical_partition(std::move(char_parts));

  // (ii)
  if (char_parts.size() != parts.size()) {
    return Rejection{"count", std::to_string(parts.size()) + " superclasses but " +
                                  std::to_string(char_parts.size()) + " supercharacter parts"};
  }
  // (i), second half: implied by the rest, so a failure here is a bug.
  if (char_parts[0] != std::vector<int>{table.trivial_index}) {
    throw TheoremViolation("trivial character not isolated for closed partition; part " +
                           set_text(char_parts[0]));
  }
  // (iii)
  for (const auto& xpart : char_parts) {
    for (const auto& kpart : parts) {
      Cyclotomic first;
      for (std::size_t idx = 0; idx < kpart.size(); ++idx) {
        Cyclotomic sigma(Rational(0), table.conductor);
        for (int row : xpart) sigma += table.chars[row][kpart[idx]] * Rational(table.degrees[row]);
        if (idx == 0) {
          first = sigma;
        } else if (!(sigma == first)) {
          return Rejection{"constancy", "supercharacter of " + set_text(xpart) +
                                            " not constant on " + set_text(kpart)};
        }
      }
    }
  }
  return TheoryBuilder::build(ctx, std::move(parts), std::move(char_parts));
}

SupercharacterTheory accept_theory(const ContextPtr& ctx, const Partition& class_partition,
                                   const std::string& why) {
  auto result = validate(ctx, class_partition);
  if (auto* r = std::get_if<Rejection>(&result)) {
    throw TheoremViolation(why + ": " + r->condition + " (" + r->witness + ")");
  }
  return std::get<SupercharacterTheory>(std::move(result));
}

SupercharacterTheory minimal_sct(const ContextPtr& ctx) {
  Partition parts;
  for (int c = 0; c < ctx->class_count(); ++c) parts.push_back({c});
  return accept_theory(ctx, parts, "minimal theory rejected");
}

SupercharacterTheory maximal_sct(const ContextPtr& ctx) {
  Partition parts{{0}};
  std::vector<int> rest;
  for (int c = 1; c < ctx->class_count(); ++c) rest.push_back(c);
  if (!rest.empty()) parts.push_back(std::move(rest));
  return accept_theory(ctx, parts, "maximal theory rejected");
}

SupercharacterTheory from_automorphisms(const ContextPtr& ctx,
                                        std::span<const Automorphism> subgroup) {
  const auto& g = ctx->group();
  const auto& cls = ctx->classes();
  const auto& table = ctx->table();
  std::vector<Automorphism> autos(subgroup.begin(), subgroup.end());
  if (autos.empty()) autos.push_back(Automorphism::identity(g.order()));
  for (const auto& a : autos) {
    if (!a.is_automorphism_of(g)) throw InputError("not an automorphism of " + g.label());
  }
  if (!is_closed_under_composition(autos)) {
    throw InputError("automorphism set is not closed under composition");
  }

  UnionFind class_orbits(cls.count());
  UnionFind char_orbits(table.size());
  std::map<ClassFunction, int> row_of;
  for (int row = 0; row < table.size(); ++row) row_of[table.chars[row]] = row;
  for (const auto& a : autos) {
    const Automorphism a_inv = a.inverse();
    for (int c = 0; c < cls.count(); ++c) {
      class_orbits.unite(c, cls.class_of[a(cls.representative(c))]);
    }
    for (int row = 0; row < table.size(); ++row) {
      ClassFunction moved(cls.count());
      for (int c = 0; c < cls.count(); ++c) {
        moved[c] = table.chars[row][cls.class_of[a_inv(cls.representative(c))]];
      }
      auto it = row_of.find(moved);
      if (it == row_of.end()) throw TheoremViolation("automorphism image of a character is not irreducible");
      char_orbits.unite(row, it->second);
    }
  }
  Partition class_parts = class_orbits.parts();
  Partition char_parts = char_orbits.parts();
  if (class_parts.size() != char_parts.size()) {
    throw TheoremViolation("automorphism orbits on classes and characters differ in number");
  }
  auto theory = accept_theory(ctx, class_parts, "automorphism orbit partition rejected");
  if (theory.char_parts() != char_parts) {
    throw TheoremViolation("character orbits disagree with the partition induced by class orbits");
  }
  return theory;
}

std::vector<Cyclotomic> supercharacter_values(const SupercharacterTheory& theory, int x_part) {
  if (x_part < 0 || x_part >= theory.size()) throw InputError("supercharacter part out of range");
  const auto& table = theory.context()->table();
  std::vector<Cyclotomic> values;
  for (const auto& kpart : theory.class_parts()) {
    Cyclotomic sigma(Rational(0), table.conductor);
    for (int row : theory.char_parts()[x_part]) {
      sigma += table.chars[row][kpart.front()] * Rational(table.degrees[row]);
    }
    values.push_back(std::move(sigma));
  }
  return values;
}

bool is_coarser(const SupercharacterTheory& a, const SupercharacterTheory& b) {
  if (!(a.group() == b.group())) throw InputError("is_coarser: theories are on different groups");
  auto refines = [](const Partition& fine, auto coarse_label) {
    for (const auto& part : fine) {
      for (int x : part) {
        if (coarse_label(x) != coarse_label(part.front())) return false;
      }
    }
    return true;
  };
  bool by_classes = refines(a.class_parts(), [&](int c) { return b.part_of_class(c); });
  bool by_chars = refines(a.char_parts(), [&](int r) { return b.part_of_char(r); });
  if (by_classes != by_chars) {
    throw TheoremViolation("class and character partitions disagree on refinement");
  }
  return by_classes;
}

Partition class_partition_from_elements(const TheoryContext& ctx, const Partition& element_parts) {
  const auto& cls = ctx.classes();
  const int n = ctx.group().order();
  std::vector<int> label(n, -1);
  for (int p = 0; p < static_cast<int>(element_parts.size()); ++p) {
    for (int x : element_parts[p]) {
      if (x < 0 || x >= n) throw InputError("element " + std::to_string(x) + " out of range");
      if (label[x] >= 0) throw InputError("element " + std::to_string(x) + " in two parts");
      label[x] = p;
    }
  }
  Partition out(element_parts.size());
  for (int c = 0; c < cls.count(); ++c) {
    const int p = label[cls.representative(c)];
    for (int x : cls.classes[c]) {
      if (label[x] < 0) throw InputError("element " + std::to_string(x) + " not covered");
      if (label[x] != p) {
        throw InputError("part splits conjugacy class " + std::to_string(c) + " " +
                         set_text(cls.classes[c]));
      }
    }
    out[p].push_back(c);
  }
  return canonical_partition(std::move(out));
}

}  // namespace supchar
