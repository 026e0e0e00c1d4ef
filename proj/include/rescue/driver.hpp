#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <mutex>
#include <string>
#include <vector>

#include "rescue/bounds.hpp"
#include "rescue/family.hpp"
#include "rescue/model.hpp"
#include "rescue/obstacle.hpp"
#include "rescue/util.hpp"

namespace rescue {

enum class SchedulePolicy { RoundRobin, Sequential };

struct SolveConfig {
  int spb_size = -1;         // -1: 2*(m+1)+20 clamped to [20, n]
  int final_dfs_size = 20;   // clamped to spb_size
  int nb_iter = 50;          // obstacle calls per hyperplane visit
  SchedulePolicy policy = SchedulePolicy::RoundRobin;
  bool strict_gap = false;
  std::int64_t time_limit_ms = 0;  // 0: unlimited
  int threads = 1;
  std::ostream* trace = nullptr;   // one line per add_clause
  bool check_invariants = false;   // family invariant check after every add
  // Observation hook for suites: every certificate with the bound at record
  // time.  Must be fast; called on the recording thread.
  std::function<void(int k, const Certificate&, std::int64_t lb)> certificate_hook;

  SearchConfig resolved_search(int n, int m) const;
};

enum class SolveStatus { Proved, TimeLimited };

enum class KStatus { Open, Exhausted, ClosedAtRoot, Infeasible };

const char* k_status_name(KStatus s);

struct HyperplaneStat {
  int k = 0;
  KStatus status = KStatus::Open;
  std::int64_t ub_int = -1;  // -1: LP never solved
  std::int64_t obstacle_calls = 0;
  std::int64_t clauses_recorded = 0;
};

struct LbPoint {
  std::int64_t value = 0;
  std::int64_t time_ms = 0;
  std::vector<std::uint8_t> x;
};

struct SolveReport {
  std::string instance;
  int n = 0;
  int m = 0;
  SolveStatus status = SolveStatus::TimeLimited;
  std::int64_t optimum = 0;  // proved optimum, or best bound when time-limited
  std::vector<std::uint8_t> solution;
  std::int64_t time_ms = 0;
  std::vector<LbPoint> trajectory;        // strictly increasing values
  std::vector<HyperplaneStat> hyperplanes;
  std::int64_t total_obstacle_calls = 0;
  std::int64_t total_clauses = 0;
  std::int64_t total_lp_solves = 0;
  std::uint64_t total_bnb_nodes = 0;
};

// Surrogate-ratio greedy: items by descending c_j / sum_i(a_ij / max(b_i,1)),
// inserted when they fit every row.  Always feasible (the all-zero vector is).
FullSolution greedy_lb(const Instance& inst);

// Shared monotone incumbent.  Value reads are atomic; solution updates are
// validated against the instance before being accepted.
class Incumbent {
 public:
  Incumbent(const Instance& inst, std::chrono::steady_clock::time_point t0);
  std::int64_t value() const { return value_.load(std::memory_order_acquire); }
  // Raises the incumbent if sol improves; records a trajectory point.
  void offer(const FullSolution& sol);
  FullSolution best() const;
  std::vector<LbPoint> trajectory() const;

 private:
  const Instance& inst_;
  std::chrono::steady_clock::time_point t0_;
  mutable std::mutex mu_;
  std::atomic<std::int64_t> value_{0};
  FullSolution best_;
  std::vector<LbPoint> trajectory_;
};

struct KStats {
  std::int64_t obstacle_calls = 0;
  std::int64_t clauses_recorded = 0;
  std::uint64_t bnb_nodes = 0;
};

// Up to nb_iter obstacle + add_clause rounds on one hyperplane; stops early
// on exhaustion.  Returns the number of rounds executed.
int iterative_rs(ClauseFamily& family, const HyperplaneData& h, const Instance& inst,
                 Incumbent& incumbent, int nb_iter, const SolveConfig& cfg,
                 const Deadline& deadline, KStats& stats);

// Full solve: greedy bound, cardinality decomposition, resolution search per
// hyperplane under the chosen schedule, proof when every hyperplane closes.
SolveReport solve(const Instance& inst, const SolveConfig& cfg = {});

}  // namespace rescue
