#pragma once

#include <string>
#include <vector>

#include "supchar/enumerate.hpp"
#include "supchar/iso.hpp"
#include "supchar/sct.hpp"

namespace supchar {

// The minimal theory of H x| K carried onto H x K. Both groups use the same
// element indices (pairs (h, k) at h * |K| + k), so the embedding is the
// identity on superclass indicator vectors.
struct EmbeddingReport {
  SemidirectSpec spec;
  ContextPtr semidirect;
  ContextPtr direct;
  SupercharacterTheory minimal;   // minimal theory of H x| K
  SupercharacterTheory embedded;  // its image A, a theory of H x K
  std::vector<int> natural_map;   // part of minimal -> part of embedded, same elements
  IsomorphismVerdict natural_verdict;
  TableMatch match;               // between the two supercharacter tables
  IsomorphismVerdict certified_verdict;  // for match.col_perm
  int class_pairs_checked = 0;    // products compared in both groups
};

// Throws TheoremViolation if A is not a theory, the tables are not
// equivalent, or either isomorphism check fails.
EmbeddingReport embed_minimal_sct(const SemidirectSpec& spec);

struct OrbitComparison {
  SupercharacterTheory orbit;     // theory of H x K from the orbits of im(psi)
  SupercharacterTheory embedded;  // A
  bool strictly_coarser = false;  // A != orbit theory
};

// Throws TheoremViolation unless A is equal to or coarser than the orbit theory.
OrbitComparison psi_orbit_sct(const SemidirectSpec& spec);
OrbitComparison psi_orbit_sct(const EmbeddingReport& embedding);

struct BijectionPair {
  int semidirect_index = 0;  // into semidirect_theories
  int direct_index = 0;      // into coarser_theories
  TableMatch certificate;
};

struct BijectionReport {
  std::vector<SupercharacterTheory> semidirect_theories;
  std::vector<SupercharacterTheory> coarser_theories;  // theories of H x K coarser than A
  std::vector<BijectionPair> pairs;
  std::vector<std::string> problems;
  bool pass = false;
};

BijectionReport verify_bijection(const SemidirectSpec& spec, const EnumerationOptions& options = {});

struct CorollaryPair {
  int dihedral_index = 0;
  int cyclic_index = 0;
  TableMatch certificate;
  IsomorphismVerdict verdict;
};

struct CorollaryReport {
  int m = 0;
  std::vector<SupercharacterTheory> dihedral_theories;
  std::vector<SupercharacterTheory> cyclic_theories;
  std::vector<CorollaryPair> pairs;
  std::vector<int> unmatched;
  bool pass = false;
};

// Matches every theory of the dihedral group of order 2m to a theory of the
// cyclic group of order 2m with an equivalent table. Throws InputError for
// even or small m.
CorollaryReport verify_dihedral_corollary(int m, const EnumerationOptions& options = {});

}  // namespace supchar
