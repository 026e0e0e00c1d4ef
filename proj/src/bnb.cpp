#include "rescue/bnb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rescue {

namespace {

struct Searcher {
  const Subproblem& sp;
  const Instance& inst;
  const HyperplaneData& h;
  const Deadline& deadline;
  bool use_rc_rule;

  int depth_count;  // |free_order|
  std::vector<std::int8_t> cur;
  std::vector<std::int64_t> residual;
  std::vector<std::vector<std::int64_t>> top_profit;  // [d][r]: r best profits in suffix d
  std::int64_t lb;
  int ones = 0;
  std::int64_t profit = 0;
  double consumed = 0.0;
  SubproblemResult result;

  Searcher(const Subproblem& sp, const Instance& inst, const HyperplaneData& h, std::int64_t lb,
           const Deadline& deadline, bool use_rc_rule)
      : sp(sp), inst(inst), h(h), deadline(deadline), use_rc_rule(use_rc_rule),
        depth_count(static_cast<int>(sp.free_order.size())), cur(sp.context),
        residual(sp.residual_cap), lb(lb) {
    top_profit.resize(depth_count + 1);
    for (int d = depth_count; d >= 0; --d) {
      std::vector<std::int64_t> profits;
      for (int i = d; i < depth_count; ++i) profits.push_back(inst.c[sp.free_order[i]]);
      std::sort(profits.rbegin(), profits.rend());
      top_profit[d].assign(profits.size() + 1, 0);
      for (std::size_t i = 0; i < profits.size(); ++i)
        top_profit[d][i + 1] = top_profit[d][i] + profits[i];
    }
  }

  std::uint8_t preferred_value(int var) const {
    switch (h.var_class[var]) {
      case VarClass::NonbasicZero: return 0;
      case VarClass::NonbasicOne: return 1;
      case VarClass::Basic: return h.xbar[var] >= 0.5 ? 1 : 0;
    }
    return 0;
  }

  void record_leaf() {
    const std::int64_t value = sp.context_profit + profit;
    if (value <= lb) return;
    FullSolution sol;
    sol.x.resize(inst.n);
    for (int j = 0; j < inst.n; ++j) sol.x[j] = cur[j] == 1 ? 1 : 0;
    sol.value = value;
    sol.feasible = true;
    result.improving.push_back(std::move(sol));
    lb = value;
  }

  // Returns false when the branch is pruned before descending.
  bool try_branch(int depth, int var, std::uint8_t value) {
    const int remaining_after = depth_count - depth - 1;
    const int ones_after = ones + (value == 1 ? 1 : 0);
    if (ones_after > sp.residual_cardinality) return false;                    // window, high side
    if (ones_after + remaining_after < sp.residual_cardinality) return false;  // window, low side

    if (value == 1) {
      for (int i = 0; i < inst.m; ++i)
        if (inst.a(i, var) > residual[i]) return false;  // integer capacity
    }

    double extra = 0.0;
    if ((value == 1 && h.var_class[var] == VarClass::NonbasicZero) ||
        (value == 0 && h.var_class[var] == VarClass::NonbasicOne))
      extra = std::abs(h.rc[var]);
    const bool rc_active = use_rc_rule && remaining_after + 1 > sp.final_dfs_size;
    if (rc_active && consumed + extra > sp.gap_remaining + 1e-6) return false;  // reduced-cost gap

    const int need = sp.residual_cardinality - ones_after;
    const std::int64_t value_delta = value == 1 ? inst.c[var] : 0;
    if (sp.context_profit + profit + value_delta + top_profit[depth + 1][need] <= lb)
      return false;  // profit bound

    // apply
    cur[var] = static_cast<std::int8_t>(value);
    ones = ones_after;
    profit += value_delta;
    consumed += extra;
    if (value == 1)
      for (int i = 0; i < inst.m; ++i) residual[i] -= inst.a(i, var);

    descend(depth + 1);

    // undo
    if (value == 1)
      for (int i = 0; i < inst.m; ++i) residual[i] += inst.a(i, var);
    consumed -= extra;
    profit -= value_delta;
    ones -= value == 1 ? 1 : 0;
    cur[var] = -1;
    return true;
  }

  void descend(int depth) {
    if ((++result.nodes & 4095) == 0) deadline.check();
    if (depth == depth_count) {
      record_leaf();
      return;
    }
    const int var = sp.free_order[depth];
    const std::uint8_t first = preferred_value(var);
    try_branch(depth, var, first);
    try_branch(depth, var, static_cast<std::uint8_t>(1 - first));
  }

  SubproblemResult run() {
    for (std::int64_t r : residual)
      if (r < 0) return std::move(result);  // context already over capacity
    if (sp.residual_cardinality < 0 || sp.residual_cardinality > depth_count)
      return std::move(result);
    descend(0);
    return std::move(result);
  }
};

void validate_subproblem(const Subproblem& sp, const Instance& inst) {
  if (static_cast<int>(sp.context.size()) != inst.n)
    throw std::invalid_argument("subproblem context length mismatch");
  if (static_cast<int>(sp.residual_cap.size()) != inst.m)
    throw std::invalid_argument("subproblem residual capacity length mismatch");
  std::vector<char> free_flag(inst.n, 0);
  for (int v : sp.free_order) {
    if (v < 0 || v >= inst.n || sp.context[v] != -1 || free_flag[v])
      throw std::invalid_argument("subproblem free_order is not the free variable set");
    free_flag[v] = 1;
  }
  for (int j = 0; j < inst.n; ++j)
    if (sp.context[j] == -1 && !free_flag[j])
      throw std::invalid_argument("subproblem free_order misses a free variable");
}

}  // namespace

SubproblemResult solve_subproblem(const Subproblem& sp, const Instance& inst,
                                  const HyperplaneData& h, std::int64_t lb,
                                  const Deadline& deadline) {
  validate_subproblem(sp, inst);
  Searcher s(sp, inst, h, lb, deadline, /*use_rc_rule=*/true);
  return s.run();
}

SubproblemResult dfs_enumerate(const Subproblem& sp, const Instance& inst,
                               const HyperplaneData& h, std::int64_t lb,
                               const Deadline& deadline) {
  validate_subproblem(sp, inst);
  if (static_cast<int>(sp.free_order.size()) > sp.final_dfs_size)
    throw std::invalid_argument("dfs_enumerate called above the tail size");
  Searcher s(sp, inst, h, lb, deadline, /*use_rc_rule=*/false);
  return s.run();
}

}  // namespace rescue
