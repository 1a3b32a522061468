#pragma once

#include <memory>
#include <vector>

#include "supchar/cyclotomic.hpp"
#include "supchar/group.hpp"

namespace supchar {

// Values of a class function, one entry per conjugacy class.
using ClassFunction = std::vector<Cyclotomic>;

// Exact irreducible characters. Rows are ordered by degree, with the trivial
// character first and ties broken by the lexicographic order of the value
// vectors. All values live in Q(zeta_N) with N = exp(G).
struct CharacterTable {
  std::shared_ptr<const FiniteGroup> group;
  ClassData classes;
  int conductor = 1;
  std::vector<ClassFunction> chars;
  std::vector<int> degrees;
  int trivial_index = 0;

  int size() const { return static_cast<int>(chars.size()); }
  // chi(g) for an element rather than a class.
  const Cyclotomic& value(int row, int element) const {
    return chars[row][classes.class_of[element]];
  }
};

// Irreducible characters by inducing linear characters of subgroups, which is
// complete for monomial groups. Throws InputError if the induced characters
// do not fill the table and LimitError above order 64.
CharacterTable character_table(const FiniteGroup& g);

// (1/|G|) sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b, const FiniteGroup& g,
                         const ClassData& classes);

ClassFunction regular_character(const FiniteGroup& g, const ClassData& classes);

bool rows_orthonormal(const CharacterTable& table);
bool columns_orthogonal(const CharacterTable& table);

// Element of the group algebra, one coefficient per group element.
using AlgebraElement = std::vector<Cyclotomic>;

struct CentralIdempotent {
  AlgebraElement coords;
};

// e_chi = chi(e)/|G| * sum_g conj(chi(g)) g
CentralIdempotent central_idempotent(const CharacterTable& table, int row);

// Group algebra product: (a b)(g) = sum_x a(x) b(x^-1 g).
AlgebraElement convolve(const FiniteGroup& g, const AlgebraElement& a, const AlgebraElement& b);

}  // namespace supchar
