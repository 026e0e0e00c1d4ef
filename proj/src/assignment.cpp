#include "rescue/assignment.hpp"

#include <cmath>
#include <stdexcept>

namespace rescue {

const char* origin_name(AssignOrigin o) {
  switch (o) {
    case AssignOrigin::Family: return "family";
    case AssignOrigin::Implied: return "implied";
    case AssignOrigin::Waxed: return "waxed";
    case AssignOrigin::Bnb: return "bnb";
  }
  return "?";
}

PartialAssignment::PartialAssignment(const Instance& inst, const HyperplaneData& h)
    : inst_(inst), h_(h), state_(inst.n, -1), consumed_(inst.m, 0) {}

void PartialAssignment::assign(int var, std::uint8_t value, AssignOrigin origin) {
  if (var < 0 || var >= inst_.n) throw std::invalid_argument("assign: variable out of range");
  if (value > 1) throw std::invalid_argument("assign: value not binary");
  if (state_[var] != -1) throw std::invalid_argument("assign: variable already assigned");
  state_[var] = static_cast<std::int8_t>(value);
  log_.push_back({{var, value}, origin});
  if (value == 1) {
    ++count_ones_;
    for (int i = 0; i < inst_.m; ++i) consumed_[i] += inst_.a(i, var);
    if (h_.var_class[var] == VarClass::NonbasicZero) consumed_gap_ += std::abs(h_.rc[var]);
  } else {
    ++count_zeros_;
    if (h_.var_class[var] == VarClass::NonbasicOne) consumed_gap_ += std::abs(h_.rc[var]);
  }
}

int PartialAssignment::violated_row() const {
  for (int i = 0; i < inst_.m; ++i)
    if (consumed_[i] > inst_.b[i]) return i;
  return -1;
}

bool PartialAssignment::bookkeeping_consistent() const {
  std::vector<std::int64_t> weights(inst_.m, 0);
  int ones = 0, zeros = 0;
  for (int j = 0; j < inst_.n; ++j) {
    if (state_[j] == 1) {
      ++ones;
      for (int i = 0; i < inst_.m; ++i) weights[i] += inst_.a(i, j);
    } else if (state_[j] == 0) {
      ++zeros;
    }
  }
  if (ones != count_ones_ || zeros != count_zeros_) return false;
  if (weights != consumed_) return false;
  if (static_cast<int>(log_.size()) != ones + zeros) return false;
  const double expected = rescue::consumed_gap(h_, state_);
  return std::abs(expected - consumed_gap_) <= 1e-9 * (1.0 + std::abs(expected));
}

}  // namespace rescue
