#pragma once

#include <cstdint>
#include <vector>

#include "rescue/bounds.hpp"
#include "rescue/model.hpp"
#include "rescue/util.hpp"

namespace rescue {

// Residual subproblem handed from the obstacle descent to branch & bound.
// free_order fixes the branching order: nonbasic variables by decreasing
// |rc| (ties by index), basic variables last.
struct Subproblem {
  std::vector<int> free_order;
  std::vector<std::int8_t> context;         // -1 free, 0/1 fixed by the descent
  std::vector<std::int64_t> residual_cap;   // b_i minus context consumption
  int residual_cardinality = 0;             // k minus context ones
  double gap_remaining = 0.0;               // effective gap minus context consumption
  std::int64_t context_profit = 0;
  int final_dfs_size = 20;
};

struct SubproblemResult {
  // Feasible completions, each strictly better than the bound in force when
  // it was found; values strictly increase in discovery order.
  std::vector<FullSolution> improving;
  bool exhausted = true;
  std::uint64_t nodes = 0;
};

// Depth-first search over free_order; branching tries the LP-optimal value
// first.  Pruning: (a) integer capacity, (b) the cardinality window,
// (c) remaining reduced-cost gap with a 1e-6 margin, (d) profit bound —
// current profit plus the residual-cardinality largest remaining profits,
// pruned when <= lb.  lb rises as solutions are found.  Checks the deadline
// periodically and throws TimeLimitReached.
SubproblemResult solve_subproblem(const Subproblem& sp, const Instance& inst,
                                  const HyperplaneData& h, std::int64_t lb,
                                  const Deadline& deadline = {});

// Tail enumeration for the last few variables (smallest |rc| and basics):
// same search without the reduced-cost rule (c), which cannot prune there.
// Precondition: |free_order| <= final_dfs_size.
SubproblemResult dfs_enumerate(const Subproblem& sp, const Instance& inst,
                               const HyperplaneData& h, std::int64_t lb,
                               const Deadline& deadline = {});

}  // namespace rescue
