#include "supchar/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "supchar/error.hpp"

namespace supchar {

std::uint64_t bell_number(int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) {
      const std::uint64_t prev = next.back();
      next.push_back(prev > kMax - x ? kMax : prev + x);
    }
    row = std::move(next);
  }
  return row.front();
}

void sort_theories(std::vector<SupercharacterTheory>& theories) {
  std::sort(theories.begin(), theories.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.encoding() < b.encoding();
  });
}

namespace {

struct SearchState {
  const ContextPtr& ctx;
  std::uint64_t candidates = 0;
  std::vector<SupercharacterTheory> found;
  Partition parts;

  explicit SearchState(const ContextPtr& c) : ctx(c) {}

  void accept_if_theory() {
    ++candidates;
    if (!products_closed(*ctx, parts)) return;
    auto result = validate(ctx, parts);
    if (auto* t = std::get_if<SupercharacterTheory>(&result)) {
      found.push_back(std::move(*t));
    } else {
      // Closure holds, so the partition spans a subalgebra and must validate.
      throw TheoremViolation("closed class partition failed validation: " +
                             std::get<Rejection>(result).witness);
    }
  }
};

// Restricted growth strings over the non-identity classes 1..k-1; the
// identity class is pinned to its own part.
class GrowthStringSearch {
 public:
  GrowthStringSearch(const ContextPtr& ctx, int items) : ctx_(ctx), items_(items) {}

  // All prefixes of the given length.
  std::vector<std::vector<int>> prefixes(int length) const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxv) -> void {
      if (static_cast<int>(cur.size()) == length) {
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= maxv + 1; ++v) {
        cur.push_back(v);
        self(self, std::max(maxv, v));
        cur.pop_back();
      }
    };
    if (length == 0) return {{}};
    cur.push_back(0);
    rec(rec, 0);
    return out;
  }

  void complete(const std::vector<int>& prefix, SearchState& state) const {
    std::vector<int> rgs(prefix);
    rgs.resize(items_);
    int maxv = -1;
    for (int v : prefix) maxv = std::max(maxv, v);
    fill(static_cast<int>(prefix.size()), maxv, rgs, state);
  }

 private:
  void fill(int pos, int maxv, std::vector<int>& rgs, SearchState& state) const {
    if (pos == items_) {
      auto& parts = state.parts;
      parts.resize(static_cast<std::size_t>(maxv) + 2);
      for (auto& p : parts) p.clear();
      parts[0].push_back(0);
      for (int i = 0; i < items_; ++i) parts[rgs[i] + 1].push_back(i + 1);
      state.accept_if_theory();
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[pos] = v;
      fill(pos + 1, std::max(maxv, v), rgs, state);
    }
  }

  const ContextPtr& ctx_;
  int items_;
};

// Builds parts one at a time; a part is final once chosen, so closure among
// finished parts can be checked before the rest is filled in.
class BlockSearch {
 public:
  explicit BlockSearch(const ContextPtr& ctx) : ctx_(ctx), k_(ctx->class_count()) {}

  // Candidate first non-identity parts (each containing class 1).
  std::vector<std::vector<int>> first_blocks() const {
    std::vector<std::vector<int>> out;
    if (k_ < 2) return out;
    std::vector<int> rest;
    for (int c = 2; c < k_; ++c) rest.push_back(c);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      std::vector<int> block{1};
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1) block.push_back(rest[i]);
      }
      out.push_back(std::move(block));
    }
    return out;
  }

  void run_from(const std::vector<int>& first, SearchState& state) const {
    state.parts.assign(1, std::vector<int>{0});
    std::vector<char> used(k_, 0);
    used[0] = 1;
    if (k_ == 1) {
      state.accept_if_theory();
      return;
    }
    for (int c : first) used[c] = 1;
    state.parts.push_back(first);
    if (finished_parts_closed(state.parts)) extend(used, state);
  }

 private:
  // Closure checks that became decidable when the last part was added.
  bool finished_parts_closed(const Partition& parts) const {
    const int p = static_cast<int>(parts.size()) - 1;
    std::vector<int> all(parts.size());
    std::iota(all.begin(), all.end(), 0);
    const int newest[] = {p};
    for (int i = 1; i <= p; ++i) {
      for (int j = i; j <= p; ++j) {
        std::span<const int> check = (j == p) ? std::span<const int>(all) : std::span<const int>(newest);
        if (!product_closed(*ctx_, parts, i, j, check)) return false;
      }
    }
    return true;
  }

  void extend(std::vector<char>& used, SearchState& state) const {
    int first_free = -1;
    std::vector<int> rest;
    for (int c = 0; c < k_; ++c) {
      if (used[c]) continue;
      if (first_free < 0) {
        first_free = c;
      } else {
        rest.push_back(c);
      }
    }
    if (first_free < 0) {
      state.accept_if_theory();
      return;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
      std::vector<int> block{first_free};
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (mask >> i & 1) block.push_back(rest[i]);
      }
      for (int c : block) used[c] = 1;
      state.parts.push_back(block);
      if (finished_parts_closed(state.parts)) extend(used, state);
      state.parts.pop_back();
      for (int c : block) used[c] = 0;
    }
  }

  const ContextPtr& ctx_;
  int k_;
};

template <typename Task, typename Run>
void run_tasks(const std::vector<Task>& tasks, int jobs, const ContextPtr& ctx, Run run,
               EnumerationResult& result) {
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::exception_ptr failure;
  auto worker = [&] {
    SearchState state(ctx);
    try {
      for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) run(tasks[t], state);
    } catch (...) {
      std::lock_guard lock(merge);
      if (!failure) failure = std::current_exception();
      return;
    }
    std::lock_guard lock(merge);
    result.candidates += state.candidates;
    for (auto& t : state.found) result.theories.push_back(std::move(t));
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

EnumerationResult all_supercharacter_theories(const ContextPtr& ctx,
                                              const EnumerationOptions& options) {
  const int k = ctx->class_count();
  if (k > options.limit_classes) {
    throw LimitError("enumeration refused: " + std::to_string(k) + " conjugacy classes exceed limit " +
                     std::to_string(options.limit_classes) + " (Bell(" + std::to_string(k - 1) +
                     ") = " + std::to_string(bell_number(k - 1)) + " candidate partitions)");
  }
  if (k > 64) throw LimitError("enumeration supports at most 64 classes");
  EnumerationResult result;
  if (k == 1) {
    SearchState state(ctx);
    state.parts = {{0}};
    state.accept_if_theory();
    result.candidates = state.candidates;
    result.theories = std::move(state.found);
  } else if (options.prune) {
    BlockSearch search(ctx);
    run_tasks(search.first_blocks(), options.jobs, ctx,
              [&](const std::vector<int>& first, SearchState& s) { search.run_from(first, s); },
              result);
  } else {
    const int items = k - 1;
    GrowthStringSearch search(ctx, items);
    run_tasks(search.prefixes(std::min(items, 5)), options.jobs, ctx,
              [&](const std::vector<int>& prefix, SearchState& s) { search.complete(prefix, s); },
              result);
  }
  sort_theories(result.theories);
  result.accepted = result.theories.size();
#ifndef NDEBUG
  std::set<std::vector<int>> encodings;
  for (const auto& t : result.theories) {
    bool fresh = encodings.insert(t.encoding()).second;
    assert(fresh && "enumeration produced a duplicate theory");
  }
#endif
  return result;
}

}  // namespace supchar
