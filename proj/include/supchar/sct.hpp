#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "supchar/character.hpp"
#include "supchar/group.hpp"

namespace supchar {

// A set partition given as a list of parts. Canonical form: each part sorted,
// parts ordered by their minimal member.
using Partition = std::vector<std::vector<int>>;

Partition canonical_partition(Partition parts);

// Everything about one group that supercharacter-theory computations share:
// the character table, class multiplication constants, and the per-row
// central-character values. Immutable and safe to share across threads.
class TheoryContext {
 public:
  static std::shared_ptr<const TheoryContext> create(const FiniteGroup& g);
  static std::shared_ptr<const TheoryContext> create(CharacterTable table);

  const FiniteGroup& group() const { return *table_.group; }
  const ClassData& classes() const { return table_.classes; }
  const CharacterTable& table() const { return table_; }
  int class_count() const { return classes().count(); }

  // Number of pairs (x, y) in C_a x C_b with x y equal to a fixed element of
  // C_c; this is the coefficient of every element of C_c in C_a^ C_b^.
  int structure_constant(int a, int b, int c) const {
    return constants_[(static_cast<std::size_t>(a) * k_ + b) * k_ + c];
  }
  // |C| chi(C) / chi(e): the scalar by which the class sum C^ acts on e_chi.
  const Cyclotomic& central_value(int row, int c) const { return central_[row][c]; }
  // Class of the inverses of C's elements.
  int inverse_class(int c) const { return inverse_class_[c]; }

 private:
  explicit TheoryContext(CharacterTable table);

  CharacterTable table_;
  int k_ = 0;
  std::vector<int> constants_;
  std::vector<std::vector<Cyclotomic>> central_;
  std::vector<int> inverse_class_;
};

using ContextPtr = std::shared_ptr<const TheoryContext>;

// A validated supercharacter theory: the superclass partition K of the
// conjugacy classes, the matching partition X of the irreducible characters,
// and the cached superclass sums K^ and idempotent sums E_X.
class SupercharacterTheory {
 public:
  const ContextPtr& context() const { return ctx_; }
  const FiniteGroup& group() const { return ctx_->group(); }

  // Parts of conjugacy-class indices. Part 0 is the identity class.
  const Partition& class_parts() const { return class_parts_; }
  // Parts of character-table row indices. Part 0 is the trivial character.
  const Partition& char_parts() const { return char_parts_; }
  int size() const { return static_cast<int>(class_parts_.size()); }

  int part_of_class(int c) const { return class_label_[c]; }
  int part_of_char(int row) const { return char_label_[row]; }

  // Superclasses as sorted element sets.
  Partition superclasses() const;
  std::vector<int> superclass_sizes() const;
  // 0/1 indicator vector of each superclass over the group elements.
  const std::vector<std::vector<int>>& superclass_sums() const { return superclass_sums_; }
  // E_X over the group elements.
  const std::vector<AlgebraElement>& idempotent_sums() const { return idempotent_sums_; }

  // Restricted growth string over class indices; canonical for the partition.
  std::vector<int> encoding() const { return class_label_; }

  friend bool operator==(const SupercharacterTheory& a, const SupercharacterTheory& b);

 private:
  friend struct TheoryBuilder;
  SupercharacterTheory() = default;

  ContextPtr ctx_;
  Partition class_parts_;
  Partition char_parts_;
  std::vector<int> class_label_;
  std::vector<int> char_label_;
  std::vector<std::vector<int>> superclass_sums_;
  std::vector<AlgebraElement> idempotent_sums_;
};

// Why a candidate class partition is not a supercharacter theory.
struct Rejection {
  std::string condition;  // "partition", "identity", "closure", "count", "constancy"
  std::string witness;
};

using ValidationResult = std::variant<SupercharacterTheory, Rejection>;

ValidationResult validate(const ContextPtr& ctx, const Partition& class_partition);
// validate(), throwing TheoremViolation with the rejection text on failure.
// Use where the input is known to be a theory.
SupercharacterTheory accept_theory(const ContextPtr& ctx, const Partition& class_partition,
                                   const std::string& why);

// Location where superclass-sum products fail to stay in the span.
struct ClosureWitness {
  int left = 0, right = 0;   // parts multiplied
  int part = 0;              // part on which the product is not constant
  int class_a = 0, class_b = 0;
  long coeff_a = 0, coeff_b = 0;
};

// True iff every product of superclass sums is a combination of superclass
// sums, tested through the class structure constants. parts are class-index
// parts with parts[0] = {0}.
bool products_closed(const TheoryContext& ctx, std::span<const std::vector<int>> parts,
                     ClosureWitness* witness = nullptr);
// Closure for the single product parts[i] * parts[j]; parts listed in
// check_parts must have constant coefficients.
bool product_closed(const TheoryContext& ctx, std::span<const std::vector<int>> parts, int i,
                    int j, std::span<const int> check_parts, ClosureWitness* witness = nullptr);

SupercharacterTheory minimal_sct(const ContextPtr& ctx);
SupercharacterTheory maximal_sct(const ContextPtr& ctx);
// Orbits of a subgroup of Aut(G) on classes and on characters. Throws
// InputError if the automorphisms are invalid or not closed.
SupercharacterTheory from_automorphisms(const ContextPtr& ctx,
                                        std::span<const Automorphism> subgroup);

// sigma_X on one representative per superclass.
std::vector<Cyclotomic> supercharacter_values(const SupercharacterTheory& theory, int x_part);

// True iff b is equal to or coarser than a. Checked on both partitions.
bool is_coarser(const SupercharacterTheory& a, const SupercharacterTheory& b);

// Converts element-set parts into class-index parts; throws InputError if a
// part is not a union of conjugacy classes.
Partition class_partition_from_elements(const TheoryContext& ctx, const Partition& element_parts);

}  // namespace supchar
