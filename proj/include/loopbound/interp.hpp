#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "loopbound/ast.hpp"

namespace loopbound {

// A store assigns a nonnegative value to each of X1..Xn (index i-1 holds Xi).
using Store = std::vector<std::uint64_t>;

struct ExecLimits {
  // Cap on distinct stores tracked in any intermediate or final set, and
  // (scaled by a constant factor) on total enumeration work. Exceeding
  // either marks the result truncated and stops expansion.
  std::size_t max_stores = 1'000'000;
  // Cap on any computed value; paths whose next value would exceed it are
  // pruned and the result is marked truncated.
  std::uint64_t max_value = 1'000'000'000'000ull;
};

struct ExecResult {
  std::set<Store> final_stores;
  std::vector<std::uint64_t> max_per_var;  // componentwise max, 0 if empty
  std::uint64_t max_step_count = 0;
  bool truncated = false;
};

// Enumerates every store reachable from s0: skip is the identity, an
// assignment stores the exact expression value, sequence composes
// relations, choice unions both branches, and a loop takes any number of
// body iterations up to the counter's value at loop entry. Step counts:
// skip and assignments cost 1, choice and loop control cost 0, and a
// loop's cost is the sum of the iterations taken; max_step_count is the
// maximum over all executions.
ExecResult reachable_stores(const Command& c, const Store& s0,
                            const ExecLimits& lim = {});

// Componentwise maxima of the reachable final stores.
std::vector<std::uint64_t> max_outputs(const Command& c, const Store& s0,
                                       const ExecLimits& lim = {});

struct GrowthRow {
  std::uint64_t input = 0;  // uniform input value N
  std::vector<std::uint64_t> max_per_var;
  bool truncated = false;
};

// max_outputs at the uniform store (N, ..., N) for each probe value N.
std::vector<GrowthRow> growth_probe(const Program& p,
                                    const std::vector<std::uint64_t>& probes,
                                    const ExecLimits& lim = {});

}  // namespace loopbound
