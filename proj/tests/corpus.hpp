// Small groups shared by the test suites.
#pragma once

#include <string>
#include <vector>

#include "supchar/group.hpp"

namespace corpus {

struct Entry {
  std::string name;
  supchar::FiniteGroup group;
};

inline std::vector<Entry> small_groups() {
  using namespace supchar;
  std::vector<Entry> out;
  for (int n = 2; n <= 12; ++n) out.push_back({"C" + std::to_string(n), make_cyclic(n)});
  const int v4[] = {2, 2};
  const int c2c4[] = {2, 4};
  out.push_back({"C2xC2", make_abelian(v4)});
  out.push_back({"C2xC4", make_abelian(c2c4)});
  out.push_back({"D6", dihedral(3)});
  out.push_back({"D8", dihedral(4)});
  out.push_back({"D10", dihedral(5)});
  out.push_back({"D14", dihedral(7)});
  out.push_back({"C3xC2 trivial", semidirect_product(trivial_action(make_cyclic(3), make_cyclic(2)))});
  out.push_back({"C3:C4", semidirect_product(inversion_action(make_cyclic(3), make_cyclic(4)))});
  out.push_back({"C5:C4", semidirect_product(power_action(make_cyclic(5), make_cyclic(4), 2))});
  out.push_back({"C7:C3", semidirect_product(power_action(make_cyclic(7), make_cyclic(3), 2))});
  return out;
}

}  // namespace corpus
