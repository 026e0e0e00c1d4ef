#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rescue/model.hpp"

namespace rescue {

// Exhaustive reference solver, independent of every other solver component.
// Gray-code enumeration with incremental weight updates; limited to n <= 25.
// Ties on value resolve to the lexicographically smallest vector.
FullSolution brute_force(const Instance& inst);

// All feasible solutions with value >= lb + 1, optionally restricted to the
// hyperplane sum(x) == k.  Returned sorted lexicographically by vector.
std::vector<FullSolution> enumerate_improving(const Instance& inst, std::int64_t lb,
                                              std::optional<int> k = std::nullopt);

}  // namespace rescue
