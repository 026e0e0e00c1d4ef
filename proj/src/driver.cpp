#include "rescue/driver.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <deque>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace rescue {

namespace {

std::mutex trace_mu;  // trace streams are shared across worker threads

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

}  // namespace

SearchConfig SolveConfig::resolved_search(int n, int m) const {
  SearchConfig s;
  s.spb_size = spb_size >= 0 ? spb_size : std::min(n, std::max(20, 2 * (m + 1) + 20));
  s.final_dfs_size = std::min(final_dfs_size, s.spb_size);
  s.strict_gap = strict_gap;
  return s;
}

const char* k_status_name(KStatus s) {
  switch (s) {
    case KStatus::Open: return "open";
    case KStatus::Exhausted: return "exhausted";
    case KStatus::ClosedAtRoot: return "closed-at-root";
    case KStatus::Infeasible: return "infeasible";
  }
  return "?";
}

FullSolution greedy_lb(const Instance& inst) {
  std::vector<double> ratio(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    double denom = 0.0;
    for (int i = 0; i < inst.m; ++i)
      denom += static_cast<double>(inst.a(i, j)) /
               static_cast<double>(std::max<std::int64_t>(inst.b[i], 1));
    ratio[j] = denom > 0.0 ? static_cast<double>(inst.c[j]) / denom
                           : std::numeric_limits<double>::infinity();
  }
  std::vector<int> order(inst.n);
  for (int j = 0; j < inst.n; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ratio[a] != ratio[b]) return ratio[a] > ratio[b];
    return a < b;
  });

  std::vector<std::uint8_t> x(inst.n, 0);
  std::vector<std::int64_t> load(inst.m, 0);
  for (int j : order) {
    bool fits = true;
    for (int i = 0; i < inst.m && fits; ++i) fits = load[i] + inst.a(i, j) <= inst.b[i];
    if (!fits) continue;
    x[j] = 1;
    for (int i = 0; i < inst.m; ++i) load[i] += inst.a(i, j);
  }
  return evaluate(inst, x);
}

Incumbent::Incumbent(const Instance& inst, std::chrono::steady_clock::time_point t0)
    : inst_(inst), t0_(t0) {
  best_.x.assign(inst.n, 0);
  best_.value = 0;
  best_.feasible = true;
  value_.store(-1, std::memory_order_release);  // any feasible offer improves
}

void Incumbent::offer(const FullSolution& sol) {
  const FullSolution checked = evaluate(inst_, sol.x);
  if (!checked.feasible)
    throw std::logic_error("incumbent offered an infeasible solution");
  if (checked.value != sol.value)
    throw std::logic_error("incumbent offered a solution with a misstated value");
  std::lock_guard<std::mutex> lock(mu_);
  if (checked.value <= value_.load(std::memory_order_relaxed)) return;
  value_.store(checked.value, std::memory_order_release);
  best_ = checked;
  trajectory_.push_back({checked.value, elapsed_ms(t0_), checked.x});
}

FullSolution Incumbent::best() const {
  std::lock_guard<std::mutex> lock(mu_);
  return best_;
}

std::vector<LbPoint> Incumbent::trajectory() const {
  std::lock_guard<std::mutex> lock(mu_);
  return trajectory_;
}

int iterative_rs(ClauseFamily& family, const HyperplaneData& h, const Instance& inst,
                 Incumbent& incumbent, int nb_iter, const SolveConfig& cfg,
                 const Deadline& deadline, KStats& stats) {
  const SearchConfig scfg = cfg.resolved_search(inst.n, inst.m);
  int rounds = 0;
  while (rounds < nb_iter && !family.exhausted()) {
    deadline.check();
    const std::int64_t lb = incumbent.value();
    const ObstacleOutcome o = obstacle(family, h, inst, lb, scfg, deadline);
    ++rounds;
    ++stats.obstacle_calls;
    stats.bnb_nodes += o.bnb_nodes;
    if (o.best) incumbent.offer(*o.best);  // raise the bound before recording
    if (cfg.certificate_hook) cfg.certificate_hook(h.k, o.certificate, incumbent.value());
    const AddClauseResult r = family.add_clause(o.certificate);
    if (r == AddClauseResult::Continue) ++stats.clauses_recorded;
    if (cfg.trace) {
      std::lock_guard<std::mutex> lock(trace_mu);
      *cfg.trace << "k=" << h.k << " case=" << family.last_case()
                 << " size=" << o.certificate.coords.size()
                 << " depth=" << family.clauses().size() << "\n";
    }
    if (cfg.check_invariants) {
      const ClauseFamily::Diagnostics d = family.invariant_check();
      if (!d.ok) throw std::logic_error("clause family invariant violated: " + d.violations.front());
    }
  }
  return rounds;
}

namespace {

struct KState {
  int k = 0;
  std::optional<HyperplaneData> h;
  std::optional<ClauseFamily> family;
  KStatus status = KStatus::Open;
  KStats stats;
};

struct Scheduler {
  const Instance& inst;
  const SolveConfig& cfg;
  const Deadline& deadline;
  Incumbent& incumbent;
  std::vector<KState>& ks;
  std::atomic<std::int64_t> lp_solves{0};

  void ensure_lp(KState& s) {
    if (s.h) return;
    s.h = hyperplane_relaxation(inst, s.k);
    if (s.k > 0) lp_solves.fetch_add(1, std::memory_order_relaxed);
    if (s.h->status == HyperplaneStatus::Infeasible) s.status = KStatus::Infeasible;
    else s.family.emplace(inst.n);
  }

  // One visit: at most nb_iter obstacle rounds.
  void visit(KState& s) {
    if (s.status != KStatus::Open) return;
    ensure_lp(s);
    if (s.status != KStatus::Open) return;
    iterative_rs(*s.family, *s.h, inst, incumbent, cfg.nb_iter, cfg, deadline, s.stats);
    if (s.family->exhausted())
      s.status = s.stats.clauses_recorded == 0 ? KStatus::ClosedAtRoot : KStatus::Exhausted;
  }

  void run_sequential() {
    for (KState& s : ks)
      while (s.status == KStatus::Open) {
        deadline.check();
        visit(s);
      }
  }

  void run_round_robin() {
    for (KState& s : ks) {
      deadline.check();
      visit(s);
    }
    std::vector<int> order(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const std::int64_t ua = ks[a].h ? ks[a].h->ub_int : -1;
      const std::int64_t ub = ks[b].h ? ks[b].h->ub_int : -1;
      if (ua != ub) return ua > ub;
      return ks[a].k < ks[b].k;
    });
    while (true) {
      bool any_open = false;
      for (int idx : order) {
        if (ks[idx].status != KStatus::Open) continue;
        any_open = true;
        deadline.check();
        visit(ks[idx]);
      }
      if (!any_open) break;
    }
  }

  // Work-queue schedule: each pull is one visit; open hyperplanes requeue.
  void run_threaded(bool& time_limited) {
    std::mutex qmu;
    std::condition_variable cv;
    std::deque<int> queue;
    int outstanding = 0;
    bool stop = false;
    std::exception_ptr error;
    bool hit_limit = false;

    for (std::size_t i = 0; i < ks.size(); ++i) {
      queue.push_back(static_cast<int>(i));
      ++outstanding;
    }

    auto worker = [&]() {
      while (true) {
        int idx = -1;
        {
          std::unique_lock<std::mutex> lk(qmu);
          cv.wait(lk, [&] { return stop || !queue.empty() || outstanding == 0; });
          if (stop || queue.empty()) return;  // queue empty here implies outstanding == 0
          idx = queue.front();
          queue.pop_front();
        }
        bool ok = true;
        try {
          visit(ks[idx]);
        } catch (const TimeLimitReached&) {
          std::lock_guard<std::mutex> lk(qmu);
          hit_limit = true;
          stop = true;
          ok = false;
        } catch (...) {
          std::lock_guard<std::mutex> lk(qmu);
          if (!error) error = std::current_exception();
          stop = true;
          ok = false;
        }
        {
          std::lock_guard<std::mutex> lk(qmu);
          if (!ok) {
            cv.notify_all();
            return;
          }
          if (ks[idx].status == KStatus::Open) {
            queue.push_back(idx);
          } else {
            --outstanding;
          }
          cv.notify_all();
        }
      }
    };

    std::vector<std::thread> pool;
    const int nthreads = std::max(1, cfg.threads);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    if (hit_limit) time_limited = true;
  }
};

}  // namespace

SolveReport solve(const Instance& inst, const SolveConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  inst.validate();
  const Deadline deadline = Deadline::after_ms(cfg.time_limit_ms);

  SolveReport report;
  report.instance = inst.name;
  report.n = inst.n;
  report.m = inst.m;

  Incumbent incumbent(inst, t0);
  incumbent.offer(greedy_lb(inst));

  std::vector<KState> ks;
  Scheduler sched{inst, cfg, deadline, incumbent, ks};
  bool time_limited = false;

  try {
    deadline.check();
    const auto range = cardinality_range(inst, incumbent.value());
    sched.lp_solves.fetch_add(2, std::memory_order_relaxed);
    if (range) {
      ks.reserve(range->k_max - range->k_min + 1);
      for (int k = range->k_min; k <= range->k_max; ++k) {
        KState s;
        s.k = k;
        ks.push_back(std::move(s));
      }
      if (cfg.threads > 1) {
        sched.run_threaded(time_limited);
      } else if (cfg.policy == SchedulePolicy::Sequential) {
        sched.run_sequential();
      } else {
        sched.run_round_robin();
      }
    }
  } catch (const TimeLimitReached&) {
    time_limited = true;
  }

  report.status = time_limited ? SolveStatus::TimeLimited : SolveStatus::Proved;
  const FullSolution best = incumbent.best();
  report.optimum = best.value;
  report.solution = best.x;
  report.trajectory = incumbent.trajectory();
  report.time_ms = elapsed_ms(t0);
  report.total_lp_solves = sched.lp_solves.load();
  for (const KState& s : ks) {
    HyperplaneStat stat;
    stat.k = s.k;
    stat.status = s.status;
    stat.ub_int = s.h && s.h->status == HyperplaneStatus::Open ? s.h->ub_int : -1;
    stat.obstacle_calls = s.stats.obstacle_calls;
    stat.clauses_recorded = s.stats.clauses_recorded;
    report.hyperplanes.push_back(stat);
    report.total_obstacle_calls += s.stats.obstacle_calls;
    report.total_clauses += s.stats.clauses_recorded;
    report.total_bnb_nodes += s.stats.bnb_nodes;
  }
  return report;
}

}  // namespace rescue
