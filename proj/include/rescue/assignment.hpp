#pragma once

#include <cstdint>
#include <vector>

#include "rescue/bounds.hpp"
#include "rescue/family.hpp"
#include "rescue/model.hpp"

namespace rescue {

enum class AssignOrigin : std::uint8_t { Family, Implied, Waxed, Bnb };

const char* origin_name(AssignOrigin o);

// Partial assignment built during one obstacle descent.  Tracks, per
// assignment, exact integer capacity consumption, the cardinality counters
// and the |rc| mass consumed by assignments opposite to the LP optimum.
class PartialAssignment {
 public:
  PartialAssignment(const Instance& inst, const HyperplaneData& h);

  struct LogEntry {
    Coordinate coord;
    AssignOrigin origin;
  };

  void assign(int var, std::uint8_t value, AssignOrigin origin);

  std::int8_t state(int var) const { return state_[var]; }
  const std::vector<std::int8_t>& states() const { return state_; }
  const std::vector<LogEntry>& log() const { return log_; }
  int count_ones() const { return count_ones_; }
  int count_zeros() const { return count_zeros_; }
  int free_count() const { return inst_.n - count_ones_ - count_zeros_; }
  const std::vector<std::int64_t>& consumed() const { return consumed_; }
  double consumed_gap() const { return consumed_gap_; }

  // First capacity row exceeded by the assigned ones, or -1.
  int violated_row() const;

  // Recomputes weights, counters and consumed gap from scratch and compares
  // with the incremental bookkeeping (consistency diagnostic).
  bool bookkeeping_consistent() const;

  const Instance& instance() const { return inst_; }
  const HyperplaneData& hyperplane() const { return h_; }

 private:
  const Instance& inst_;
  const HyperplaneData& h_;
  std::vector<std::int8_t> state_;  // -1 free, 0, 1
  std::vector<LogEntry> log_;
  std::vector<std::int64_t> consumed_;
  int count_ones_ = 0;
  int count_zeros_ = 0;
  double consumed_gap_ = 0.0;
};

}  // namespace rescue
