#include "rescue/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rescue {

namespace {

constexpr int kMaxOracleVars = 25;

// Walks all 2^n vectors in Gray-code order, flipping one bit per step and
// updating value, row weights and the violated-row count incrementally.
template <typename Visit>
void gray_scan(const Instance& inst, Visit&& visit) {
  const int n = inst.n;
  std::vector<std::uint8_t> x(n, 0);
  std::vector<std::int64_t> w(inst.m, 0);
  std::int64_t value = 0;
  int ones = 0;
  int violated = 0;
  visit(x, value, ones, violated == 0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < count; ++i) {
    const int j = std::countr_zero(i);
    const int sign = x[j] ? -1 : 1;
    x[j] ^= 1;
    value += sign * inst.c[j];
    ones += sign;
    for (int r = 0; r < inst.m; ++r) {
      const bool was_over = w[r] > inst.b[r];
      w[r] += sign * inst.a(r, j);
      const bool is_over = w[r] > inst.b[r];
      violated += static_cast<int>(is_over) - static_cast<int>(was_over);
    }
    visit(x, value, ones, violated == 0);
  }
}

bool lex_less(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

FullSolution brute_force(const Instance& inst) {
  inst.validate();
  if (inst.n > kMaxOracleVars)
    throw std::invalid_argument("oracle limited to " + std::to_string(kMaxOracleVars) +
                                " variables");
  FullSolution best;
  best.x.assign(inst.n, 0);
  best.value = 0;
  best.feasible = true;  // the all-zero vector is feasible (b >= 0)
  gray_scan(inst, [&](const std::vector<std::uint8_t>& x, std::int64_t value, int /*ones*/,
                      bool feasible) {
    if (!feasible) return;
    if (value > best.value || (value == best.value && lex_less(x, best.x))) {
      best.x = x;
      best.value = value;
    }
  });
  return best;
}

std::vector<FullSolution> enumerate_improving(const Instance& inst, std::int64_t lb,
                                              std::optional<int> k) {
  inst.validate();
  if (inst.n > kMaxOracleVars)
    throw std::invalid_argument("oracle limited to " + std::to_string(kMaxOracleVars) +
                                " variables");
  std::vector<FullSolution> out;
  gray_scan(inst, [&](const std::vector<std::uint8_t>& x, std::int64_t value, int ones,
                      bool feasible) {
    if (!feasible || value < lb + 1) return;
    if (k && ones != *k) return;
    out.push_back(FullSolution{x, value, true});
  });
  std::sort(out.begin(), out.end(),
            [](const FullSolution& a, const FullSolution& b) { return lex_less(a.x, b.x); });
  return out;
}

}  // namespace rescue
