#pragma once

#include <cstdint>
#include <vector>

#include "supchar/sct.hpp"

namespace supchar {

struct EnumerationOptions {
  int limit_classes = 13;
  int jobs = 1;
  // Build partitions part by part and drop a branch as soon as the finished
  // parts fail closure. Same output as the plain search.
  bool prune = false;
};

struct EnumerationResult {
  std::vector<SupercharacterTheory> theories;
  std::uint64_t candidates = 0;  // complete class partitions examined
  std::uint64_t accepted = 0;
};

// Every supercharacter theory of the group, finest first: sorted by
// decreasing number of superclasses, then by class-label encoding.
// Throws LimitError when the class count exceeds options.limit_classes.
EnumerationResult all_supercharacter_theories(const ContextPtr& ctx,
                                              const EnumerationOptions& options = {});

// Bell(n), saturating at UINT64_MAX.
std::uint64_t bell_number(int n);

void sort_theories(std::vector<SupercharacterTheory>& theories);

}  // namespace supchar
