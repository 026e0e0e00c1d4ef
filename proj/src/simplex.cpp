#include "rescue/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rescue/util.hpp"

namespace rescue {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPriceTol = 1e-9;
constexpr double kPivotTol = 1e-10;
constexpr double kDegenerateTol = 1e-11;
constexpr int kRefactorEvery = 100;

// Two-phase bounded-variable primal simplex on a dense row-major tableau,
// with an explicitly maintained basis inverse.  Internally always maximizes;
// the caller flips signs for minimization.
//
// Column layout: [structurals | one slack per <= row | one artificial per
// row].  Artificials are "active" only where the initial point violates a
// row; inactive ones are pinned to [0,0] and never priced.
struct Engine {
  int nrows = 0;
  int nstruct = 0;
  int ncols = 0;
  std::vector<double> mat;   // nrows x ncols
  std::vector<double> rhs;
  std::vector<double> lo, up;
  std::vector<double> obj;   // objective of the current phase
  std::vector<double> x;
  std::vector<BasisStatus> state;
  std::vector<int> basis;    // row -> column
  std::vector<double> binv;  // nrows x nrows
  std::vector<int> art_col;  // row -> artificial column
  bool bland = false;
  int degen_run = 0;
  int pivots_since_refactor = 0;
  int iterations = 0;
  int iteration_cap = 0;

  double& a(int r, int c) { return mat[static_cast<std::size_t>(r) * ncols + c]; }
  double aval(int r, int c) const { return mat[static_cast<std::size_t>(r) * ncols + c]; }
  double& bi(int r, int c) { return binv[static_cast<std::size_t>(r) * nrows + c]; }
  double bival(int r, int c) const { return binv[static_cast<std::size_t>(r) * nrows + c]; }

  bool fixed(int col) const { return up[col] - lo[col] <= 1e-12; }

  void build(const LpProblem& p) {
    nrows = p.num_rows();
    nstruct = p.num_vars();
    int nslack = 0;
    for (const LpRow& row : p.rows)
      if (row.relation == LpRelation::LessEqual) ++nslack;
    ncols = nstruct + nslack + nrows;
    mat.assign(static_cast<std::size_t>(nrows) * ncols, 0.0);
    rhs.resize(nrows);
    lo.assign(ncols, 0.0);
    up.assign(ncols, 0.0);
    for (int j = 0; j < nstruct; ++j) {
      lo[j] = p.lower[j];
      up[j] = p.upper[j];
    }
    art_col.resize(nrows);
    int slack = nstruct;
    for (int r = 0; r < nrows; ++r) {
      const LpRow& row = p.rows[r];
      for (int j = 0; j < nstruct; ++j) a(r, j) = row.coeffs[j];
      rhs[r] = row.rhs;
      if (row.relation == LpRelation::LessEqual) {
        a(r, slack) = 1.0;
        lo[slack] = 0.0;
        up[slack] = kInf;
        ++slack;
      }
      art_col[r] = nstruct + nslack + r;
    }
    x.assign(ncols, 0.0);
    state.assign(ncols, BasisStatus::AtLower);
    basis.assign(nrows, -1);
    binv.assign(static_cast<std::size_t>(nrows) * nrows, 0.0);
    iteration_cap = 10000 + 200 * (ncols + nrows);
  }

  // Start every structural at its lower bound; give each row either its
  // slack (when that is bound-feasible) or a sign-adjusted artificial.
  // Returns true when any artificial is active (phase 1 needed).
  bool init_basis() {
    bool need_phase1 = false;
    for (int j = 0; j < nstruct; ++j) {
      x[j] = lo[j];
      state[j] = BasisStatus::AtLower;
    }
    for (int r = 0; r < nrows; ++r) {
      double res = rhs[r];
      for (int j = 0; j < nstruct; ++j) res -= aval(r, j) * x[j];
      int slack = -1;
      for (int c = nstruct; c < art_col[0]; ++c)
        if (aval(r, c) == 1.0) {
          slack = c;
          break;
        }
      const int art = art_col[r];
      if (slack >= 0 && res >= 0.0) {
        basis[r] = slack;
        state[slack] = BasisStatus::Basic;
        x[slack] = res;
        // artificial never needed: pin it
        a(r, art) = 1.0;
        lo[art] = up[art] = 0.0;
      } else {
        const double sigma = res >= 0.0 ? 1.0 : -1.0;
        a(r, art) = sigma;
        lo[art] = 0.0;
        up[art] = kInf;
        basis[r] = art;
        state[art] = BasisStatus::Basic;
        x[art] = std::abs(res);
        if (slack >= 0) {
          x[slack] = 0.0;
          state[slack] = BasisStatus::AtLower;
        }
        need_phase1 = true;
      }
    }
    refactor();
    return need_phase1;
  }

  void refactor() {
    // Gauss-Jordan inversion of the basis matrix with partial pivoting.
    std::vector<double> m(static_cast<std::size_t>(nrows) * nrows, 0.0);
    std::vector<double> inv(static_cast<std::size_t>(nrows) * nrows, 0.0);
    for (int r = 0; r < nrows; ++r) {
      for (int k = 0; k < nrows; ++k) m[static_cast<std::size_t>(r) * nrows + k] = aval(r, basis[k]);
      inv[static_cast<std::size_t>(r) * nrows + r] = 1.0;
    }
    for (int col = 0; col < nrows; ++col) {
      int piv = col;
      double best = std::abs(m[static_cast<std::size_t>(col) * nrows + col]);
      for (int r = col + 1; r < nrows; ++r) {
        const double v = std::abs(m[static_cast<std::size_t>(r) * nrows + col]);
        if (v > best) {
          best = v;
          piv = r;
        }
      }
      if (best < 1e-12) throw SimplexError("singular basis during refactorization");
      if (piv != col) {
        for (int k = 0; k < nrows; ++k) {
          std::swap(m[static_cast<std::size_t>(piv) * nrows + k],
                    m[static_cast<std::size_t>(col) * nrows + k]);
          std::swap(inv[static_cast<std::size_t>(piv) * nrows + k],
                    inv[static_cast<std::size_t>(col) * nrows + k]);
        }
      }
      const double d = m[static_cast<std::size_t>(col) * nrows + col];
      for (int k = 0; k < nrows; ++k) {
        m[static_cast<std::size_t>(col) * nrows + k] /= d;
        inv[static_cast<std::size_t>(col) * nrows + k] /= d;
      }
      for (int r = 0; r < nrows; ++r) {
        if (r == col) continue;
        const double f = m[static_cast<std::size_t>(r) * nrows + col];
        if (f == 0.0) continue;
        for (int k = 0; k < nrows; ++k) {
          m[static_cast<std::size_t>(r) * nrows + k] -= f * m[static_cast<std::size_t>(col) * nrows + k];
          inv[static_cast<std::size_t>(r) * nrows + k] -= f * inv[static_cast<std::size_t>(col) * nrows + k];
        }
      }
    }
    binv = std::move(inv);
    recompute_basics();
    pivots_since_refactor = 0;
  }

  // x_B = B^{-1} (rhs - sum of nonbasic columns at their values).
  void recompute_basics() {
    std::vector<double> v = rhs;
    for (int c = 0; c < ncols; ++c) {
      if (state[c] == BasisStatus::Basic || x[c] == 0.0) continue;
      for (int r = 0; r < nrows; ++r) v[r] -= aval(r, c) * x[c];
    }
    for (int r = 0; r < nrows; ++r) {
      double s = 0.0;
      for (int k = 0; k < nrows; ++k) s += bival(r, k) * v[k];
      x[basis[r]] = s;
    }
  }

  std::vector<double> duals() const {
    std::vector<double> y(nrows, 0.0);
    for (int k = 0; k < nrows; ++k) {
      const double cb = obj[basis[k]];
      if (cb == 0.0) continue;
      for (int r = 0; r < nrows; ++r) y[r] += cb * bival(k, r);
    }
    return y;
  }

  double reduced_cost(int col, const std::vector<double>& y) const {
    double d = obj[col];
    for (int r = 0; r < nrows; ++r) d -= y[r] * aval(r, col);
    return d;
  }

  std::vector<double> ftran(int col) const {
    std::vector<double> w(nrows, 0.0);
    for (int r = 0; r < nrows; ++r) {
      double s = 0.0;
      for (int k = 0; k < nrows; ++k) s += bival(r, k) * aval(k, col);
      w[r] = s;
    }
    return w;
  }

  LpStatus run() {
    while (true) {
      if (++iterations > iteration_cap) throw SimplexError("simplex iteration limit exceeded");
      const std::vector<double> y = duals();
      int enter = -1;
      double best = 0.0;
      for (int c = 0; c < ncols; ++c) {
        if (state[c] == BasisStatus::Basic || fixed(c)) continue;
        const double d = reduced_cost(c, y);
        const bool eligible = state[c] == BasisStatus::AtLower ? d > kPriceTol : d < -kPriceTol;
        if (!eligible) continue;
        if (bland) {
          enter = c;
          break;
        }
        const double mag = std::abs(d);
        if (mag > best) {
          best = mag;
          enter = c;
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      const double dir = state[enter] == BasisStatus::AtLower ? 1.0 : -1.0;
      const std::vector<double> w = ftran(enter);

      double t_star = up[enter] - lo[enter];  // bound-to-bound flip
      int leave_row = -1;
      bool leave_to_upper = false;
      for (int r = 0; r < nrows; ++r) {
        const double delta = -dir * w[r];  // basic value change per unit step
        const int bcol = basis[r];
        double room;
        bool to_upper;
        if (delta > kPivotTol) {
          if (up[bcol] == kInf) continue;
          room = (up[bcol] - x[bcol]) / delta;
          to_upper = true;
        } else if (delta < -kPivotTol) {
          room = (lo[bcol] - x[bcol]) / delta;
          to_upper = false;
        } else {
          continue;
        }
        if (room < 0.0) room = 0.0;
        bool take = false;
        if (leave_row < 0) {
          take = room < t_star;  // exact tie keeps the cheaper bound flip
        } else if (room < t_star - 1e-12) {
          take = true;
        } else if (room <= t_star + 1e-12 && basis[r] < basis[leave_row]) {
          take = true;  // tie-break on lowest variable index
        }
        if (take) {
          t_star = std::min(room, t_star);
          leave_row = r;
          leave_to_upper = to_upper;
        }
      }
      if (t_star == kInf) return LpStatus::Unbounded;

      if (t_star <= kDegenerateTol) {
        if (++degen_run > 10 * (nrows + ncols)) bland = true;
      } else {
        degen_run = 0;
      }

      x[enter] += dir * t_star;
      for (int r = 0; r < nrows; ++r) x[basis[r]] += -dir * t_star * w[r];

      if (leave_row < 0) {
        // entering variable traveled to its other bound
        state[enter] = dir > 0 ? BasisStatus::AtUpper : BasisStatus::AtLower;
        x[enter] = dir > 0 ? up[enter] : lo[enter];
        continue;
      }
      pivot(leave_row, enter, w, leave_to_upper);
    }
  }

  void pivot(int leave_row, int enter, const std::vector<double>& w, bool leave_to_upper) {
    const int leave = basis[leave_row];
    state[leave] = leave_to_upper ? BasisStatus::AtUpper : BasisStatus::AtLower;
    x[leave] = leave_to_upper ? up[leave] : lo[leave];
    basis[leave_row] = enter;
    state[enter] = BasisStatus::Basic;
    const double piv = w[leave_row];
    if (std::abs(piv) < kPivotTol) throw SimplexError("pivot element vanished");
    for (int k = 0; k < nrows; ++k) bi(leave_row, k) /= piv;
    for (int r = 0; r < nrows; ++r) {
      if (r == leave_row) continue;
      const double f = w[r];
      if (f == 0.0) continue;
      for (int k = 0; k < nrows; ++k) bi(r, k) -= f * bival(leave_row, k);
    }
    if (++pivots_since_refactor >= kRefactorEvery) refactor();
  }

  // Degenerate pivots that swap residual artificials out of the basis after
  // phase 1; rows without an eligible column are redundant and keep their
  // artificial basic at zero.
  void expel_artificials() {
    for (int r = 0; r < nrows; ++r) {
      if (basis[r] < art_col[0]) continue;
      int enter = -1;
      for (int c = 0; c < art_col[0]; ++c) {
        if (state[c] == BasisStatus::Basic || fixed(c)) continue;
        double alpha = 0.0;
        for (int k = 0; k < nrows; ++k) alpha += bival(r, k) * aval(k, c);
        if (std::abs(alpha) > 1e-7) {
          enter = c;
          break;
        }
      }
      if (enter < 0) continue;
      const std::vector<double> w = ftran(enter);
      const double entering_value = x[enter];
      pivot(r, enter, w, false);
      x[enter] = entering_value;  // degenerate swap: the point does not move
      recompute_basics();
    }
    for (int r = 0; r < nrows; ++r) {
      const int art = art_col[r];
      lo[art] = up[art] = 0.0;
      if (state[art] != BasisStatus::Basic) {
        state[art] = BasisStatus::AtLower;
        x[art] = 0.0;
      }
    }
  }
};

}  // namespace

LpResult solve_lp(const LpProblem& p) {
  const int n = p.num_vars();
  if (static_cast<int>(p.lower.size()) != n || static_cast<int>(p.upper.size()) != n)
    throw std::invalid_argument("bound vector length mismatch");
  for (const LpRow& row : p.rows)
    if (static_cast<int>(row.coeffs.size()) != n)
      throw std::invalid_argument("row coefficient length mismatch");
  for (int j = 0; j < n; ++j)
    if (!(p.lower[j] <= p.upper[j])) throw std::invalid_argument("lower bound above upper bound");

  const double sense = p.sense == LpSense::Max ? 1.0 : -1.0;

  Engine e;
  e.build(p);

  double bscale = 1.0;
  for (int r = 0; r < e.nrows; ++r) bscale = std::max(bscale, std::abs(e.rhs[r]));
  const double feas_tol = 1e-7 * (1.0 + bscale);

  LpResult result;
  result.x.assign(n, 0.0);
  result.basis.assign(n, BasisStatus::AtLower);
  result.reduced_costs.assign(n, 0.0);
  result.duals.assign(e.nrows, 0.0);

  const bool need_phase1 = e.init_basis();
  if (need_phase1) {
    e.obj.assign(e.ncols, 0.0);
    for (int r = 0; r < e.nrows; ++r)
      if (e.up[e.art_col[r]] == kInf) e.obj[e.art_col[r]] = -1.0;  // maximize -sum(artificials)
    const LpStatus st = e.run();
    if (st != LpStatus::Optimal) throw SimplexError("phase 1 did not terminate at an optimum");
    double infeas = 0.0;
    for (int r = 0; r < e.nrows; ++r) infeas += e.x[e.art_col[r]];
    if (infeas > feas_tol) {
      result.status = LpStatus::Infeasible;
      result.iterations = e.iterations;
      return result;
    }
    e.expel_artificials();
  } else {
    for (int r = 0; r < e.nrows; ++r) {
      const int art = e.art_col[r];
      e.lo[art] = e.up[art] = 0.0;
    }
  }

  e.bland = false;
  e.degen_run = 0;
  e.obj.assign(e.ncols, 0.0);
  for (int j = 0; j < n; ++j) e.obj[j] = sense * p.objective[j];
  const LpStatus st = e.run();
  if (st == LpStatus::Unbounded) {
    result.status = LpStatus::Unbounded;
    result.iterations = e.iterations;
    return result;
  }

  // Snap nonbasic structurals to their bounds, then extract.
  for (int j = 0; j < n; ++j) {
    if (e.state[j] == BasisStatus::AtLower) e.x[j] = e.lo[j];
    if (e.state[j] == BasisStatus::AtUpper) e.x[j] = e.up[j];
  }
  e.recompute_basics();

  const std::vector<double> y = e.duals();
  double objective = 0.0;
  for (int j = 0; j < n; ++j) objective += e.obj[j] * e.x[j];

  result.status = LpStatus::Optimal;
  result.objective = sense * objective;
  result.iterations = e.iterations;
  for (int j = 0; j < n; ++j) {
    result.x[j] = e.x[j];
    result.basis[j] = e.state[j];
    result.reduced_costs[j] = sense * e.reduced_cost(j, y);
  }
  for (int r = 0; r < e.nrows; ++r) result.duals[r] = sense * y[r];
  return result;
}

LpDiagnostics check_certificates(const LpProblem& p, const LpResult& r) {
  LpDiagnostics d;
  auto flag = [&](const std::string& msg) {
    d.ok = false;
    d.violations.push_back(msg);
  };
  if (r.status != LpStatus::Optimal) return d;

  const int n = p.num_vars();
  const int m = p.num_rows();
  if (static_cast<int>(r.x.size()) != n || static_cast<int>(r.basis.size()) != n ||
      static_cast<int>(r.reduced_costs.size()) != n || static_cast<int>(r.duals.size()) != m) {
    flag("result vector shape mismatch");
    return d;
  }

  for (int i = 0; i < m; ++i) {
    double lhs = 0.0;
    for (int j = 0; j < n; ++j) lhs += p.rows[i].coeffs[j] * r.x[j];
    const double tol = 1e-9 * (1.0 + std::abs(p.rows[i].rhs));
    const double resid = lhs - p.rows[i].rhs;
    if (p.rows[i].relation == LpRelation::LessEqual ? resid > tol : std::abs(resid) > tol)
      flag("primal residual on row " + std::to_string(i) + ": " + std::to_string(resid));
  }
  for (int j = 0; j < n; ++j) {
    if (r.x[j] < p.lower[j] - 1e-9 || r.x[j] > p.upper[j] + 1e-9)
      flag("bound violation on variable " + std::to_string(j));
  }

  const double sign = p.sense == LpSense::Max ? 1.0 : -1.0;
  for (int j = 0; j < n; ++j) {
    double rc = p.objective[j];
    for (int i = 0; i < m; ++i) rc -= r.duals[i] * p.rows[i].coeffs[j];
    if (std::abs(rc - r.reduced_costs[j]) > 1e-6)
      flag("stored reduced cost inconsistent with duals on variable " + std::to_string(j));
    // A pinned variable (lower == upper) cannot move, so no sign condition
    // applies; its dual contribution is the same from either bound.
    const bool pinned = p.upper[j] - p.lower[j] <= 1e-12;
    switch (r.basis[j]) {
      case BasisStatus::Basic:
        if (std::abs(r.reduced_costs[j]) > 1e-7)
          flag("basic variable " + std::to_string(j) + " has nonzero reduced cost");
        break;
      case BasisStatus::AtLower:
        if (!pinned && sign * r.reduced_costs[j] > 1e-7)
          flag("at-lower variable " + std::to_string(j) + " has improving reduced cost");
        break;
      case BasisStatus::AtUpper:
        if (!pinned && sign * r.reduced_costs[j] < -1e-7)
          flag("at-upper variable " + std::to_string(j) + " has improving reduced cost");
        break;
    }
  }

  double primal = 0.0;
  for (int j = 0; j < n; ++j) primal += p.objective[j] * r.x[j];
  double dual = 0.0;
  for (int i = 0; i < m; ++i) dual += r.duals[i] * p.rows[i].rhs;
  for (int j = 0; j < n; ++j) {
    if (r.basis[j] == BasisStatus::AtLower) dual += r.reduced_costs[j] * p.lower[j];
    if (r.basis[j] == BasisStatus::AtUpper) dual += r.reduced_costs[j] * p.upper[j];
  }
  if (std::abs(primal - r.objective) > 1e-6 * (1.0 + std::abs(r.objective)))
    flag("stored objective disagrees with c.x");
  if (std::abs(primal - dual) > 1e-6 * (1.0 + std::abs(primal)))
    flag("duality gap: primal " + std::to_string(primal) + " dual " + std::to_string(dual));
  return d;
}

}  // namespace rescue
