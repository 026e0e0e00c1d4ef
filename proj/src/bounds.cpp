#include "rescue/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rescue {

namespace {

LpRow capacity_row(const Instance& inst, int row) {
  LpRow r;
  r.coeffs.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) r.coeffs[j] = static_cast<double>(inst.a(row, j));
  r.relation = LpRelation::LessEqual;
  r.rhs = static_cast<double>(inst.b[row]);
  return r;
}

LpProblem base_relaxation(const Instance& inst) {
  LpProblem p;
  p.sense = LpSense::Max;
  p.objective.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) p.objective[j] = static_cast<double>(inst.c[j]);
  for (int i = 0; i < inst.m; ++i) p.rows.push_back(capacity_row(inst, i));
  p.lower.assign(inst.n, 0.0);
  p.upper.assign(inst.n, 1.0);
  return p;
}

}  // namespace

HyperplaneData hyperplane_relaxation(const Instance& inst, int k) {
  HyperplaneData h;
  h.k = k;
  if (k < 0 || k > inst.n) {
    h.status = HyperplaneStatus::Infeasible;
    return h;
  }
  if (k == 0) {
    // Unique feasible point: the origin (capacities are nonnegative).  Price
    // the cardinality row at max_j c_j so every reduced cost is nonpositive
    // and the whole variable set classifies nonbasic at zero.
    h.status = HyperplaneStatus::Open;
    h.ub_real = 0.0;
    h.ub_int = 0;
    h.xbar.assign(inst.n, 0.0);
    h.rc.resize(inst.n);
    h.var_class.assign(inst.n, VarClass::NonbasicZero);
    double lambda = 0.0;
    for (int j = 0; j < inst.n; ++j) lambda = std::max(lambda, static_cast<double>(inst.c[j]));
    for (int j = 0; j < inst.n; ++j) {
      h.rc[j] = static_cast<double>(inst.c[j]) - lambda;
      h.nonbasic_zero.push_back(j);
    }
    return h;
  }

  LpProblem p = base_relaxation(inst);
  LpRow card;
  card.coeffs.assign(inst.n, 1.0);
  card.relation = LpRelation::Equal;
  card.rhs = static_cast<double>(k);
  p.rows.push_back(card);

  const LpResult r = solve_lp(p);
  if (r.status != LpStatus::Optimal) {
    h.status = HyperplaneStatus::Infeasible;
    return h;
  }
  h.status = HyperplaneStatus::Open;
  h.ub_real = r.objective;
  h.ub_int = static_cast<std::int64_t>(std::floor(r.objective + 1e-6));
  h.xbar = r.x;
  h.rc = r.reduced_costs;
  h.var_class.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    switch (r.basis[j]) {
      case BasisStatus::Basic:
        h.var_class[j] = VarClass::Basic;
        break;
      case BasisStatus::AtLower:
        h.var_class[j] = VarClass::NonbasicZero;
        h.nonbasic_zero.push_back(j);
        break;
      case BasisStatus::AtUpper:
        h.var_class[j] = VarClass::NonbasicOne;
        h.nonbasic_one.push_back(j);
        break;
    }
  }
  return h;
}

std::optional<CardinalityRange> cardinality_range(const Instance& inst, std::int64_t lb) {
  LpProblem p = base_relaxation(inst);
  LpRow improving;  // c.x >= lb + 1, written as -c.x <= -(lb + 1)
  improving.coeffs.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) improving.coeffs[j] = -static_cast<double>(inst.c[j]);
  improving.relation = LpRelation::LessEqual;
  improving.rhs = -static_cast<double>(lb + 1);
  p.rows.push_back(improving);

  p.sense = LpSense::Min;
  p.objective.assign(inst.n, 1.0);
  const LpResult lo = solve_lp(p);
  p.sense = LpSense::Max;
  const LpResult hi = solve_lp(p);
  if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal) return std::nullopt;

  CardinalityRange range;
  range.k_min = std::max(0, static_cast<int>(std::ceil(lo.objective - 1e-6)));
  range.k_max = std::min(inst.n, static_cast<int>(std::floor(hi.objective + 1e-6)));
  if (range.k_min > range.k_max) return std::nullopt;
  return range;
}

double rc_gap(const HyperplaneData& h, std::int64_t lb) {
  return h.ub_real - static_cast<double>(lb);
}

double consumed_gap(const HyperplaneData& h, const std::vector<std::int8_t>& state) {
  double total = 0.0;
  for (int j : h.nonbasic_zero)
    if (state[j] == 1) total += std::abs(h.rc[j]);
  for (int j : h.nonbasic_one)
    if (state[j] == 0) total += std::abs(h.rc[j]);
  return total;
}

std::vector<Coordinate> implied_fixings(const HyperplaneData& h, double gap_remaining,
                                        const std::vector<std::int8_t>& state) {
  if (gap_remaining < 0.0)
    throw std::invalid_argument("implied_fixings called with negative remaining gap");
  std::vector<Coordinate> fixed;
  const int n = static_cast<int>(h.var_class.size());
  for (int j = 0; j < n; ++j) {
    if (state[j] != -1 || h.var_class[j] == VarClass::Basic) continue;
    if (std::abs(h.rc[j]) > gap_remaining + 1e-6)
      fixed.push_back({j, h.var_class[j] == VarClass::NonbasicOne ? std::uint8_t{1} : std::uint8_t{0}});
  }
  return fixed;
}

Certificate rc_certificate(const HyperplaneData& h, std::int64_t lb,
                           const std::vector<OppositeEntry>& opposite) {
  const double threshold = rc_gap(h, lb) + 1e-6;
  double total = 0.0;
  for (const OppositeEntry& e : opposite) total += e.abs_rc;
  if (!(total > threshold))
    throw std::invalid_argument("rc_certificate: opposite set does not violate the gap");

  std::vector<OppositeEntry> sorted = opposite;
  std::sort(sorted.begin(), sorted.end(), [](const OppositeEntry& a, const OppositeEntry& b) {
    if (a.abs_rc != b.abs_rc) return a.abs_rc > b.abs_rc;
    return a.var < b.var;
  });

  // Shortest violating prefix, then drop members smallest-first while the
  // remainder still violates.
  std::size_t len = 0;
  double sum = 0.0;
  while (sum <= threshold) sum += sorted[len++].abs_rc;
  std::vector<char> keep(len, 1);
  for (std::size_t i = len; i-- > 0;) {
    if (sum - sorted[i].abs_rc > threshold) {
      keep[i] = 0;
      sum -= sorted[i].abs_rc;
    }
  }

  Certificate cert;
  cert.provenance = Provenance::ReducedCost;
  for (std::size_t i = 0; i < len; ++i)
    if (keep[i]) cert.coords.push_back({sorted[i].var, sorted[i].value});
  return cert;
}

}  // namespace rescue
