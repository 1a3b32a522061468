#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace supchar {

// Largest group order handled by the exhaustive algorithms.
inline constexpr int kDefaultOrderBound = 64;

// A finite group given by its full multiplication table on elements 0..n-1.
// Immutable once constructed; every constructor validates the group axioms.
class FiniteGroup {
 public:
  // Validates the table and throws InputError naming the first failure
  // (out-of-range entry, repeated row/column entry, missing identity,
  // non-associative triple).
  static FiniteGroup from_table(std::vector<std::vector<int>> mul, std::string label,
                                std::vector<std::string> element_names = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  // x * g * x^-1
  int conjugate(int x, int g) const { return mul(mul(x, g), inverse_[x]); }

  const std::string& label() const { return label_; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::vector<std::vector<int>> table() const;

  bool is_abelian() const;
  int element_order(int g) const;
  int exponent() const;
  std::vector<int> center() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string label_;
  std::vector<std::string> names_;
};

// Conjugacy classes. classes[0] is {identity}; the rest are ordered by
// (size, minimal element). Each class lists its elements in increasing order.
struct ClassData {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> class_sizes;

  int count() const { return static_cast<int>(classes.size()); }
  int representative(int c) const { return classes[c].front(); }
  friend bool operator==(const ClassData&, const ClassData&) = default;
};

// A permutation of element indices that respects multiplication.
struct Automorphism {
  std::vector<int> perm;

  int operator()(int g) const { return perm[g]; }
  static Automorphism identity(int order);
  // (a * b)(g) = a(b(g))
  friend Automorphism operator*(const Automorphism& a, const Automorphism& b);
  Automorphism inverse() const;
  bool is_automorphism_of(const FiniteGroup& g) const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

FiniteGroup make_cyclic(int n);
// Direct sum of Z/f for each factor, elements as tuples in lexicographic order.
FiniteGroup make_abelian(std::span<const int> invariant_factors);
// Pairs (g, h) with index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup dihedral(int m);

ClassData conjugacy_classes(const FiniteGroup& g);
// Same result for any scan order; exposed so tests can check that.
ClassData conjugacy_classes(const FiniteGroup& g, std::span<const int> scan_order);

// Greedy generating set: scan elements by decreasing order and keep those not
// already generated.
std::vector<int> greedy_generators(const FiniteGroup& g);
// Elements of the subgroup generated by gens, in increasing order.
std::vector<int> generated_subgroup(const FiniteGroup& g, std::span<const int> gens);

// All automorphisms, sorted. Refuses (LimitError) groups above order_bound.
std::vector<Automorphism> automorphism_group(const FiniteGroup& g,
                                             int order_bound = kDefaultOrderBound);

// Closure of a set of automorphisms under composition.
bool is_closed_under_composition(std::span<const Automorphism> autos);

// ---------------------------------------------------------------------------
// Semidirect products

// H and K abelian; psi[k] is the automorphism of H attached to element k of K.
struct SemidirectSpec {
  FiniteGroup h;
  FiniteGroup k;
  std::vector<Automorphism> psi;

  // Throws InputError unless H and K are abelian, each psi[k] is an
  // automorphism of H and k -> psi[k] is a homomorphism.
  void validate() const;
};

SemidirectSpec trivial_action(const FiniteGroup& h, const FiniteGroup& k);
// K must be cyclic in residue order (element i is i times the generator).
// psi_i(x) = x^(unit^i); unit must be coprime to exp(H) and unit^|K| = 1 mod exp(H).
SemidirectSpec power_action(const FiniteGroup& h, const FiniteGroup& k, long unit);
// power_action with unit -1.
SemidirectSpec inversion_action(const FiniteGroup& h, const FiniteGroup& k);

// (h1, k1) * (h2, k2) = (h1 * psi_k1(h2), k1 * k2), index h * |K| + k.
FiniteGroup semidirect_product(const SemidirectSpec& spec);

}  // namespace supchar
