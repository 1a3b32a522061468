#pragma once

#include <utility>
#include <vector>

#include "supchar/sct.hpp"

namespace supchar {

// Finest theory coarser than both: the intersection of the two superclass
// sum spans, computed over Q in element coordinates.
SupercharacterTheory join(const SupercharacterTheory& a, const SupercharacterTheory& b);
// Coarsest theory finer than both: the union of the spans closed under
// multiplication.
SupercharacterTheory meet(const SupercharacterTheory& a, const SupercharacterTheory& b);

// Cover relations (i, j): theory i strictly finer than theory j with nothing
// in between. Sorted.
std::vector<std::pair<int, int>> hasse(const std::vector<SupercharacterTheory>& theories);

// Element partition whose indicator vectors span the smallest Hadamard-closed
// space containing the rows: elements g, h share a part iff every row has
// equal entries at g and h.
Partition partition_from_span(const std::vector<std::vector<Rational>>& rows, int order);

}  // namespace supchar
