#include "rescue/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rescue {

namespace {

// Waxed coordinates that survived into the certificate, in assignment order;
// family coordinates are never fresh and implied ones never enter certificates.
void fill_fresh_order(Certificate& cert, const PartialAssignment& pa) {
  std::vector<std::int8_t> member(pa.instance().n, -1);
  for (const Coordinate& c : cert.coords) member[c.var] = static_cast<std::int8_t>(c.value);
  for (const PartialAssignment::LogEntry& e : pa.log())
    if (e.origin == AssignOrigin::Waxed && member[e.coord.var] == static_cast<std::int8_t>(e.coord.value))
      cert.fresh_order.push_back(e.coord);
}

// The whole explored context: every family and waxed coordinate.  Terminal
// because implied fixings are forced in any improving completion and branch &
// bound (or forced integer infeasibility) exhausted what remains.
Certificate context_certificate(const PartialAssignment& pa) {
  Certificate cert;
  cert.provenance = Provenance::BnbExhausted;
  for (const PartialAssignment::LogEntry& e : pa.log()) {
    if (e.origin == AssignOrigin::Implied) continue;
    cert.coords.push_back(e.coord);
    if (e.origin == AssignOrigin::Waxed) cert.fresh_order.push_back(e.coord);
  }
  return cert;
}

// Capacity / cardinality recheck after an implied or waxed assignment.  When
// the non-implied coordinates alone violate, the waned certificate stands on
// its own; otherwise the violation needs the implied values and the whole
// context is certified instead.
std::optional<Certificate> integer_check(const PartialAssignment& pa, const HyperplaneData& h) {
  const Instance& inst = pa.instance();
  const int row = pa.violated_row();
  if (row >= 0) {
    std::vector<Coordinate> raw_ones;
    std::int64_t raw_weight = 0;
    for (const PartialAssignment::LogEntry& e : pa.log())
      if (e.coord.value == 1 && e.origin != AssignOrigin::Implied) {
        raw_ones.push_back(e.coord);
        raw_weight += inst.a(row, e.coord.var);
      }
    if (raw_weight > inst.b[row]) {
      Certificate cert = wane_capacity(inst, row, raw_ones);
      fill_fresh_order(cert, pa);
      return cert;
    }
    return context_certificate(pa);
  }

  const bool ones_over = pa.count_ones() > h.k;
  const bool zeros_over = pa.count_zeros() > inst.n - h.k;
  if (!ones_over && !zeros_over) return std::nullopt;

  std::vector<Coordinate> raw;
  int raw_ones = 0, raw_zeros = 0;
  for (const PartialAssignment::LogEntry& e : pa.log())
    if (e.origin != AssignOrigin::Implied) {
      raw.push_back(e.coord);
      (e.coord.value == 1 ? raw_ones : raw_zeros) += 1;
    }
  if ((ones_over && raw_ones > h.k) || (zeros_over && raw_zeros > inst.n - h.k)) {
    Certificate cert = wane_cardinality(inst.n, h.k, raw);
    fill_fresh_order(cert, pa);
    return cert;
  }
  return context_certificate(pa);
}

}  // namespace

Certificate wane_capacity(const Instance& inst, int row, const std::vector<Coordinate>& ones) {
  std::int64_t total = 0;
  for (const Coordinate& c : ones) {
    if (c.value != 1) throw std::invalid_argument("wane_capacity expects one-coordinates");
    total += inst.a(row, c.var);
  }
  if (total <= inst.b[row])
    throw std::invalid_argument("wane_capacity: ones do not exceed the capacity");

  std::vector<Coordinate> sorted = ones;
  std::sort(sorted.begin(), sorted.end(), [&](const Coordinate& a, const Coordinate& b) {
    const std::int64_t wa = inst.a(row, a.var), wb = inst.a(row, b.var);
    if (wa != wb) return wa > wb;
    return a.var < b.var;
  });

  std::size_t len = 0;
  std::int64_t sum = 0;
  while (sum <= inst.b[row]) sum += inst.a(row, sorted[len++].var);
  std::vector<char> keep(len, 1);
  for (std::size_t i = len; i-- > 0;) {
    const std::int64_t w = inst.a(row, sorted[i].var);
    if (sum - w > inst.b[row]) {
      keep[i] = 0;
      sum -= w;
    }
  }

  Certificate cert;
  cert.provenance = Provenance::CapacityViolation;
  for (std::size_t i = 0; i < len; ++i)
    if (keep[i]) cert.coords.push_back(sorted[i]);
  return cert;
}

Certificate wane_cardinality(int n, int k, const std::vector<Coordinate>& assigned) {
  std::vector<int> ones, zeros;
  for (const Coordinate& c : assigned) (c.value == 1 ? ones : zeros).push_back(c.var);
  std::sort(ones.begin(), ones.end());
  std::sort(zeros.begin(), zeros.end());

  Certificate cert;
  cert.provenance = Provenance::CardinalityViolation;
  if (static_cast<int>(ones.size()) > k) {
    for (int i = 0; i <= k; ++i) cert.coords.push_back({ones[i], 1});
  } else if (static_cast<int>(zeros.size()) > n - k) {
    for (int i = 0; i <= n - k; ++i) cert.coords.push_back({zeros[i], 0});
  } else {
    throw std::invalid_argument("wane_cardinality: neither window is violated");
  }
  return cert;
}

Subproblem build_subproblem(const PartialAssignment& pa, const HyperplaneData& h,
                            double effective_gap, const SearchConfig& cfg) {
  const Instance& inst = pa.instance();
  Subproblem sp;
  sp.context = pa.states();
  sp.residual_cap.resize(inst.m);
  for (int i = 0; i < inst.m; ++i) sp.residual_cap[i] = inst.b[i] - pa.consumed()[i];
  sp.residual_cardinality = h.k - pa.count_ones();
  sp.gap_remaining = effective_gap - pa.consumed_gap();
  sp.final_dfs_size = cfg.final_dfs_size;
  sp.context_profit = 0;
  for (int j = 0; j < inst.n; ++j)
    if (pa.state(j) == 1) sp.context_profit += inst.c[j];

  std::vector<int> nonbasic, basic;
  for (int j = 0; j < inst.n; ++j) {
    if (pa.state(j) != -1) continue;
    (h.var_class[j] == VarClass::Basic ? basic : nonbasic).push_back(j);
  }
  std::sort(nonbasic.begin(), nonbasic.end(), [&](int a, int b) {
    const double ra = std::abs(h.rc[a]), rb = std::abs(h.rc[b]);
    if (ra != rb) return ra > rb;
    return a < b;
  });
  sp.free_order = std::move(nonbasic);
  sp.free_order.insert(sp.free_order.end(), basic.begin(), basic.end());
  return sp;
}

ObstacleOutcome obstacle(const ClauseFamily& family, const HyperplaneData& h,
                         const Instance& inst, std::int64_t lb, const SearchConfig& cfg,
                         const Deadline& deadline) {
  if (h.status != HyperplaneStatus::Open)
    throw std::invalid_argument("obstacle called on an infeasible hyperplane");

  ObstacleOutcome out;
  const std::int64_t effective_lb = cfg.strict_gap ? lb + 1 : lb;
  const double gap = rc_gap(h, effective_lb);
  if (h.ub_int <= lb || gap < -1e-6) {
    out.certificate.provenance = Provenance::ReducedCost;
    return out;  // empty certificate: nothing on this hyperplane can improve
  }

  PartialAssignment pa(inst, h);
  for (const FamilyCoord& fc : family.u_of()) pa.assign(fc.var, fc.value, AssignOrigin::Family);

  if (const int row = pa.violated_row(); row >= 0) {
    std::vector<Coordinate> ones;
    for (const PartialAssignment::LogEntry& e : pa.log())
      if (e.coord.value == 1) ones.push_back(e.coord);
    out.certificate = wane_capacity(inst, row, ones);
    return out;
  }
  if (pa.count_ones() > h.k || pa.count_zeros() > inst.n - h.k) {
    std::vector<Coordinate> assigned;
    for (const PartialAssignment::LogEntry& e : pa.log()) assigned.push_back(e.coord);
    out.certificate = wane_cardinality(inst.n, h.k, assigned);
    return out;
  }
  if (pa.consumed_gap() > gap + 1e-6) {
    std::vector<OppositeEntry> opposite;
    for (const PartialAssignment::LogEntry& e : pa.log()) {
      const int j = e.coord.var;
      if ((e.coord.value == 1 && h.var_class[j] == VarClass::NonbasicZero) ||
          (e.coord.value == 0 && h.var_class[j] == VarClass::NonbasicOne))
        opposite.push_back({j, e.coord.value, std::abs(h.rc[j])});
    }
    out.certificate = rc_certificate(h, effective_lb, opposite);
    return out;
  }

  // Family coordinates fixed and consistent.  Implied and waxed assignments
  // below sit at the LP optimum, so the consumed gap is final from here on.
  const double gap_remaining = std::max(0.0, gap - pa.consumed_gap());
  auto apply_implied = [&]() -> std::optional<Certificate> {
    for (const Coordinate& c : implied_fixings(h, gap_remaining, pa.states())) {
      pa.assign(c.var, c.value, AssignOrigin::Implied);
      if (auto cert = integer_check(pa, h)) return cert;
    }
    return std::nullopt;
  };

  if (auto cert = apply_implied()) {
    out.certificate = std::move(*cert);
    return out;
  }

  while (pa.free_count() > cfg.spb_size) {
    int wax_var = -1;
    double wax_mag = -1.0;
    for (int j = 0; j < inst.n; ++j) {
      if (pa.state(j) != -1 || h.var_class[j] == VarClass::Basic) continue;
      const double mag = std::abs(h.rc[j]);
      if (mag > wax_mag) {
        wax_mag = mag;
        wax_var = j;
      }
    }
    if (wax_var < 0) break;  // only basic variables free: hand over regardless
    const std::uint8_t value = h.var_class[wax_var] == VarClass::NonbasicOne ? 1 : 0;
    pa.assign(wax_var, value, AssignOrigin::Waxed);
    if (auto cert = integer_check(pa, h)) {
      out.certificate = std::move(*cert);
      return out;
    }
    if (auto cert = apply_implied()) {  // structurally a no-op; kept as a recheck
      out.certificate = std::move(*cert);
      return out;
    }
  }

  const Subproblem sp = build_subproblem(pa, h, gap, cfg);
  SubproblemResult res = solve_subproblem(sp, inst, h, lb, deadline);
  out.bnb_nodes = res.nodes;
  if (!res.improving.empty()) {
    out.best = std::move(res.improving.back());
    out.try_value = out.best->value;
  }
  out.certificate = context_certificate(pa);
  return out;
}

}  // namespace rescue
