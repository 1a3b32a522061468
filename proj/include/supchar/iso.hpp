#pragma once

#include <span>
#include <string>
#include <vector>

#include "supchar/sct.hpp"

namespace supchar {

// entries[i][j] = sigma_{X_i}(g) for g in superclass K_j. Rows follow the
// theory's character parts, columns its class parts (identity column first).
struct SupercharacterTable {
  std::vector<std::vector<Cyclotomic>> entries;
  Partition row_parts;  // character rows per supercharacter
  Partition col_parts;  // class indices per superclass
  std::vector<int> col_sizes;
  int conductor = 1;

  int size() const { return static_cast<int>(entries.size()); }
};

SupercharacterTable supercharacter_table(const SupercharacterTheory& theory);

// Row i of the first table corresponds to row_perm[i] of the second, and
// likewise for columns, with all entries equal.
struct TableMatch {
  bool equivalent = false;
  std::vector<int> row_perm;
  std::vector<int> col_perm;
  std::string witness;  // why not, when not equivalent
};

// Exact search for row and column permutations making the tables identical.
// Complete: reports non-equivalence only when no permutation pair exists.
TableMatch tables_equivalent(const SupercharacterTable& first, const SupercharacterTable& second);

struct IsomorphismVerdict {
  bool sizes_preserved = true;
  bool structure_constants_preserved = true;
  bool hadamard_preserved = true;
  bool idempotents_matched = true;
  // E_X of part i maps to E_Y of part idempotent_map[i] (-1 when unmatched).
  std::vector<int> idempotent_map;
  std::vector<std::string> failures;

  bool ok() const {
    return sizes_preserved && structure_constants_preserved && hadamard_preserved &&
           idempotents_matched;
  }
};

// Checks that the linear map sending the superclass sum of part i of a to
// that of part part_map[i] of b is an isomorphism of supercharacter theories.
// Throws InputError if part_map is not a bijection of parts.
IsomorphismVerdict verify_isomorphism(const SupercharacterTheory& a, const SupercharacterTheory& b,
                                      std::span<const int> part_map);

// Coefficients c[i][j][k] with K_i^ K_j^ = sum_k c[i][j][k] K_k^.
std::vector<std::vector<std::vector<long>>> superclass_structure_constants(
    const SupercharacterTheory& theory);

}  // namespace supchar
