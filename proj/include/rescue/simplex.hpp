#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rescue {

enum class LpSense { Max, Min };
enum class LpRelation { LessEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class BasisStatus : std::uint8_t { Basic, AtLower, AtUpper };

struct LpRow {
  std::vector<double> coeffs;
  LpRelation relation = LpRelation::LessEqual;
  double rhs = 0.0;
};

struct LpProblem {
  LpSense sense = LpSense::Max;
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;              // structural values
  double objective = 0.0;             // in the problem's own sense
  std::vector<BasisStatus> basis;     // per structural variable
  std::vector<double> reduced_costs;  // c_j - y.A_j in the problem's own sense
  std::vector<double> duals;          // one multiplier per row
  int iterations = 0;
};

// Bounded-variable primal simplex over a dense tableau.  Dantzig pricing with
// a Bland's-rule fallback after a run of degenerate pivots; the basis inverse
// is refactorized every 100 pivots for drift control.  Deterministic: equal
// inputs give bit-identical results.  Throws std::invalid_argument on shape
// errors and SimplexError on numerical failure.
LpResult solve_lp(const LpProblem& p);

struct LpDiagnostics {
  bool ok = true;
  std::vector<std::string> violations;
};

// Recomputes, from scratch: primal residuals (<= 1e-9 * (1+|rhs|)), bound
// feasibility, |reduced cost| of basic variables <= 1e-7, the sign conditions
// of nonbasic reduced costs, consistency of stored reduced costs with the
// duals, and the duality identity (<= 1e-6 * (1+|objective|)).
LpDiagnostics check_certificates(const LpProblem& p, const LpResult& r);

}  // namespace rescue
