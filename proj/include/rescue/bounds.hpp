#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rescue/family.hpp"
#include "rescue/model.hpp"
#include "rescue/simplex.hpp"

namespace rescue {

enum class HyperplaneStatus { Open, Infeasible };

// Variable classification in the hyperplane LP optimum.
enum class VarClass : std::uint8_t { Basic = 0, NonbasicZero = 1, NonbasicOne = 2 };

// LP relaxation of the instance restricted to the hyperplane sum(x) == k.
struct HyperplaneData {
  int k = 0;
  HyperplaneStatus status = HyperplaneStatus::Infeasible;
  double ub_real = 0.0;
  std::int64_t ub_int = 0;  // floor(ub_real + 1e-6)
  std::vector<double> xbar;
  std::vector<double> rc;  // signed reduced costs
  std::vector<VarClass> var_class;
  std::vector<int> nonbasic_zero;
  std::vector<int> nonbasic_one;
};

// Solves max c.x s.t. A.x <= b, 1.x == k, x in [0,1]^n.  k == 0 is handled
// analytically (the unique feasible point is the origin; the cardinality row
// priced at max_j c_j keeps every reduced cost nonpositive, so all variables
// classify nonbasic_zero).
HyperplaneData hyperplane_relaxation(const Instance& inst, int k);

struct CardinalityRange {
  int k_min = 0;
  int k_max = 0;
};

// Bounds the cardinality of any solution strictly better than lb:
// k_min = ceil(min 1.x), k_max = floor(max 1.x) over
// {A.x <= b, c.x >= lb + 1, x in [0,1]^n}, with a 1e-6 rounding guard.
// nullopt when no improving solution can exist (lb is already optimal).
std::optional<CardinalityRange> cardinality_range(const Instance& inst, std::int64_t lb);

// Slack of the reduced-cost constraint: ub_real - lb.
double rc_gap(const HyperplaneData& h, std::int64_t lb);

// Total |rc| consumed by assignments opposite to the LP optimum:
// sum over nonbasic-zero variables assigned 1 and nonbasic-one variables
// assigned 0.  state[j] is -1 (free), 0 or 1.
double consumed_gap(const HyperplaneData& h, const std::vector<std::int8_t>& state);

// Free nonbasic variables whose |rc| strictly exceeds gap_remaining + 1e-6;
// each must take its LP-optimal value in any improving completion.  Throws
// std::invalid_argument when gap_remaining < 0 (the caller must have pruned).
std::vector<Coordinate> implied_fixings(const HyperplaneData& h, double gap_remaining,
                                        const std::vector<std::int8_t>& state);

// Entry of the opposite set handed to rc_certificate.
struct OppositeEntry {
  int var = 0;
  std::uint8_t value = 0;  // the assigned (opposite) value
  double abs_rc = 0.0;
};

// Minimal-by-inclusion reduced-cost certificate: descending-|rc| prefix whose
// sum exceeds rc_gap(h, lb) + 1e-6, then removal attempts in ascending |rc|
// order.  Precondition: the full set violates; throws otherwise.
Certificate rc_certificate(const HyperplaneData& h, std::int64_t lb,
                           const std::vector<OppositeEntry>& opposite);

}  // namespace rescue
