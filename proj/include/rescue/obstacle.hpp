#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rescue/assignment.hpp"
#include "rescue/bnb.hpp"
#include "rescue/bounds.hpp"
#include "rescue/family.hpp"
#include "rescue/model.hpp"
#include "rescue/util.hpp"

namespace rescue {

// Search knobs consumed below the driver.
struct SearchConfig {
  int spb_size = 20;        // residual size handed to branch & bound
  int final_dfs_size = 20;  // tail handled by plain enumeration
  bool strict_gap = false;  // use ub - (lb + 1) instead of ub - lb
};

struct ObstacleOutcome {
  static constexpr std::int64_t kNoValue = INT64_MIN;
  std::int64_t try_value = kNoValue;  // best full-solution value found
  std::optional<FullSolution> best;
  Certificate certificate;
  std::uint64_t bnb_nodes = 0;
};

// One descent from u(F): (1) consistency — load the family coordinates and
// check capacities, the cardinality window and the reduced-cost constraint;
// (2) implicit waning — apply implied fixings (excluded from certificates);
// (3) waxing — repeatedly assign the free nonbasic variable of largest |rc|
// to its LP value, rechecking after each step; (4) hand the residual to
// branch & bound once at most spb_size variables remain free.  Always returns
// a terminal certificate for the lower bound in force at return.
ObstacleOutcome obstacle(const ClauseFamily& family, const HyperplaneData& h,
                         const Instance& inst, std::int64_t lb, const SearchConfig& cfg,
                         const Deadline& deadline = {});

// Minimal capacity certificate: descending-weight prefix of the assigned
// ones exceeding b_row, then removal attempts in ascending weight order.
// Precondition: the ones' total weight exceeds b_row; throws otherwise.
Certificate wane_capacity(const Instance& inst, int row, const std::vector<Coordinate>& ones);

// Minimal cardinality certificate: the first k+1 ones in variable order when
// ones overflow, symmetrically the first (n-k)+1 zeros when zeros overflow.
// Precondition: one of the two windows is violated; throws otherwise.
Certificate wane_cardinality(int n, int k, const std::vector<Coordinate>& assigned);

// Branch order for the residual subproblem: nonbasic free variables by
// decreasing |rc| (ties by index), then basic free variables by index.
// effective_gap is rc_gap adjusted for strict_gap; the subproblem carries
// effective_gap minus the context's consumption.
Subproblem build_subproblem(const PartialAssignment& pa, const HyperplaneData& h,
                            double effective_gap, const SearchConfig& cfg);

}  // namespace rescue
