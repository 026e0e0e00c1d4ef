#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rescue/bounds.hpp"
#include "rescue/model.hpp"
#include "rescue/simplex.hpp"
#include "rescue/util.hpp"

namespace rescue::testing {

// Three-item single-constraint workhorse: optimum 14 at (1,0,1), greedy 14,
// plain LP relaxation 14.5 at (1, 0.75, 0).
inline Instance tiny_instance() {
  Instance inst;
  inst.n = 3;
  inst.m = 1;
  inst.c = {10, 6, 4};
  inst.A = {5, 4, 3};
  inst.b = {8};
  inst.name = "tiny";
  return inst;
}

inline Instance make_instance(int n, int m, std::vector<std::int64_t> c,
                              std::vector<std::int64_t> a, std::vector<std::int64_t> b,
                              std::string name = "made") {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.c = std::move(c);
  inst.A = std::move(a);
  inst.b = std::move(b);
  inst.name = std::move(name);
  inst.validate();
  return inst;
}

// The LP behind hyperplane_relaxation, rebuilt here so oracles can check the
// production path without sharing its code.
inline LpProblem hyperplane_lp(const Instance& inst, int k) {
  LpProblem p;
  p.sense = LpSense::Max;
  p.objective.assign(inst.c.begin(), inst.c.end());
  for (int i = 0; i < inst.m; ++i) {
    LpRow row;
    for (int j = 0; j < inst.n; ++j) row.coeffs.push_back(static_cast<double>(inst.a(i, j)));
    row.relation = LpRelation::LessEqual;
    row.rhs = static_cast<double>(inst.b[i]);
    p.rows.push_back(std::move(row));
  }
  LpRow card;
  card.coeffs.assign(inst.n, 1.0);
  card.relation = LpRelation::Equal;
  card.rhs = static_cast<double>(k);
  p.rows.push_back(std::move(card));
  p.lower.assign(inst.n, 0.0);
  p.upper.assign(inst.n, 1.0);
  return p;
}

// Random LP with finite bounds (vertex oracle needs boundedness).  Mixes
// senses, relations and negative data; rhs is biased so feasible and
// infeasible cases both occur.
inline LpProblem random_lp(std::mt19937_64& rng, int max_n = 6, int max_m = 3) {
  LpProblem p;
  const int n = static_cast<int>(uniform_int(rng, 1, max_n));
  const int m = static_cast<int>(uniform_int(rng, 0, max_m));
  p.sense = uniform_int(rng, 0, 1) ? LpSense::Max : LpSense::Min;
  for (int j = 0; j < n; ++j) p.objective.push_back(static_cast<double>(uniform_int(rng, -10, 10)));
  for (int i = 0; i < m; ++i) {
    LpRow row;
    for (int j = 0; j < n; ++j) row.coeffs.push_back(static_cast<double>(uniform_int(rng, -5, 9)));
    row.relation = uniform_int(rng, 0, 3) == 0 ? LpRelation::Equal : LpRelation::LessEqual;
    row.rhs = static_cast<double>(uniform_int(rng, -6, 18));
    p.rows.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    const std::int64_t lo = uniform_int(rng, -3, 2);
    p.lower.push_back(static_cast<double>(lo));
    p.upper.push_back(static_cast<double>(lo + uniform_int(rng, 0, 5)));
  }
  return p;
}

// Closed-form LP optimum for single-constraint instances: fill by profit
// density until the capacity runs out.  Integer data keeps densities far
// enough apart that double rounding cannot reorder genuinely distinct ones.
inline double fractional_greedy(const Instance& inst) {
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  auto ratio = [&](int j) {
    const double w = static_cast<double>(inst.A[j]);
    if (w == 0.0) return inst.c[j] > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    return static_cast<double>(inst.c[j]) / w;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ratio(a) > ratio(b); });
  double cap = static_cast<double>(inst.b[0]);
  double value = 0.0;
  for (int j : order) {
    const double w = static_cast<double>(inst.A[j]);
    if (w <= cap) {
      value += static_cast<double>(inst.c[j]);
      cap -= w;
    } else if (cap > 0.0) {
      value += static_cast<double>(inst.c[j]) * (cap / w);
      cap = 0.0;
    }
  }
  return value;
}

}  // namespace rescue::testing
