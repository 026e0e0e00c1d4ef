#include "rescue/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "rescue/oracle.hpp"
#include "rescue/report.hpp"
#include "rescue/util.hpp"

namespace rescue {

namespace {

Instance random_rows(std::mt19937_64& rng, int n, int m, std::int64_t coeff_max,
                     const std::string& name) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.name = name;
  inst.c.resize(n);
  for (int j = 0; j < n; ++j) inst.c[j] = uniform_int(rng, 0, coeff_max);
  inst.A.resize(static_cast<std::size_t>(m) * n);
  inst.b.resize(m);
  for (int i = 0; i < m; ++i) {
    std::int64_t row_sum = 0;
    for (int j = 0; j < n; ++j) {
      const std::int64_t a = uniform_int(rng, 0, coeff_max);
      inst.A[static_cast<std::size_t>(i) * n + j] = a;
      row_sum += a;
    }
    inst.b[i] = row_sum / 2;
  }
  inst.validate();
  return inst;
}

struct LoadedInstance {
  Instance inst;
  std::int64_t declared = 0;
};

// Reads opt.path and picks the requested instance; reports problems on err
// and returns std::nullopt instead of throwing across the CLI boundary.
std::optional<LoadedInstance> load_instance(const std::string& path, int index,
                                            std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  ParsedFile file;
  try {
    file = parse_orlib(in);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << " (token " << e.token_index << ")\n";
    return std::nullopt;
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
  if (index < 0 || index >= static_cast<int>(file.instances.size())) {
    err << "error: instance index " << index << " out of range (file has "
        << file.instances.size() << ")\n";
    return std::nullopt;
  }
  return LoadedInstance{std::move(file.instances[index]), file.declared_optimum[index]};
}

std::optional<SolveConfig> make_config(const std::string& policy, double time_limit_s,
                                       int spb_size, int final_dfs_size, int nb_iter,
                                       bool strict_gap, int threads, std::ostream& err) {
  SolveConfig cfg;
  if (policy == "rr") {
    cfg.policy = SchedulePolicy::RoundRobin;
  } else if (policy == "seq") {
    cfg.policy = SchedulePolicy::Sequential;
  } else {
    err << "error: unknown policy '" << policy << "' (expected rr or seq)\n";
    return std::nullopt;
  }
  cfg.time_limit_ms = static_cast<std::int64_t>(time_limit_s * 1000.0);
  cfg.spb_size = spb_size;
  cfg.final_dfs_size = final_dfs_size;
  cfg.nb_iter = nb_iter;
  cfg.strict_gap = strict_gap;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const InstanceGenConfig& gen,
                         const std::string& name) {
  const int n = static_cast<int>(uniform_int(rng, gen.min_n, gen.max_n));
  const int m = static_cast<int>(uniform_int(rng, gen.min_m, gen.max_m));
  return random_rows(rng, n, m, gen.coeff_max, name);
}

KnownOptimaRegistry load_registry(const std::optional<std::string>& override_path) {
  KnownOptimaRegistry reg;
  std::string path;
  if (override_path) {
    path = *override_path;
  } else if (const char* env = std::getenv("RESCUE_MKP_DATA")) {
    path = env;
  } else {
    path = "./data/known_optima.txt";
  }
  reg.load_file(path);
  return reg;
}

int cmd_solve(const SolveCmdOptions& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = load_instance(opt.path, opt.instance, err);
  if (!loaded) return kExitError;
  const auto cfg = make_config(opt.policy, opt.time_limit_s, opt.spb_size, opt.final_dfs_size,
                               opt.nb_iter, opt.strict_gap, opt.threads, err);
  if (!cfg) return kExitError;
  SolveConfig config = *cfg;
  if (opt.trace) config.trace = &err;

  KnownOptimaRegistry registry = load_registry(opt.data_path);
  if (loaded->declared != 0 && !registry.lookup(loaded->inst.name))
    registry.insert(loaded->inst.name, loaded->declared, "file-declared");

  SolveReport report;
  try {
    report = solve(loaded->inst, config);
  } catch (const std::exception& e) {
    err << "error: solve failed: " << e.what() << "\n";
    return kExitError;
  }
  write_report(report, out);

  if (report.status != SolveStatus::Proved) return kExitTimeLimit;
  if (const auto known = registry.lookup(loaded->inst.name); known && *known != report.optimum) {
    err << "error: proved optimum " << report.optimum << " but " << *registry.source_of(loaded->inst.name)
        << " records " << *known << " for " << loaded->inst.name << "\n";
    return kExitRegistryMismatch;
  }
  return kExitProved;
}

int run_verify(const VerifyCmdOptions& opt, const SolverFn& solver, std::ostream& out) {
  std::mt19937_64 rng(opt.seed);
  int mismatches = 0;
  for (int i = 0; i < opt.count; ++i) {
    const Instance inst = random_instance(rng, opt.gen, "rnd_" + std::to_string(i));
    const SolveReport report = solver(inst);
    const FullSolution reference = brute_force(inst);

    std::string failure;
    if (report.status != SolveStatus::Proved) {
      failure = "no proof";
    } else if (report.optimum != reference.value) {
      failure = "optimum " + std::to_string(report.optimum) + " != reference " +
                std::to_string(reference.value);
    } else {
      const FullSolution check = evaluate(inst, report.solution);
      if (!check.feasible)
        failure = "reported solution infeasible";
      else if (check.value != report.optimum)
        failure = "reported solution value " + std::to_string(check.value) +
                  " != optimum " + std::to_string(report.optimum);
    }
    if (!failure.empty()) {
      ++mismatches;
      out << "MISMATCH " << inst.name << " n=" << inst.n << " m=" << inst.m << ": " << failure
          << "\n";
    }
  }
  out << "verified " << opt.count << " instances, " << mismatches << " mismatches\n";
  return mismatches;
}

int cmd_verify(const VerifyCmdOptions& opt, std::ostream& out, std::ostream& err) {
  const auto cfg = make_config(opt.policy, 0.0, opt.spb_size, opt.final_dfs_size, opt.nb_iter,
                               opt.strict_gap, 1, err);
  if (!cfg) return kExitError;
  const SolveConfig config = *cfg;
  try {
    const int mismatches =
        run_verify(opt, [&](const Instance& inst) { return solve(inst, config); }, out);
    return mismatches == 0 ? kExitProved : kExitError;
  } catch (const std::exception& e) {
    err << "error: verify failed: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_bounds(const BoundsCmdOptions& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = load_instance(opt.path, opt.instance, err);
  if (!loaded) return kExitError;
  const Instance& inst = loaded->inst;

  try {
    const FullSolution greedy = greedy_lb(inst);
    const std::int64_t lb = opt.lb.value_or(greedy.value);
    out << "instance=" << inst.name << "\n";
    out << "n=" << inst.n << " m=" << inst.m << "\n";
    out << "greedy=" << greedy.value << "\n";
    out << "lb=" << lb << "\n";

    auto print_k = [&](int k) {
      const HyperplaneData h = hyperplane_relaxation(inst, k);
      if (h.status == HyperplaneStatus::Infeasible) {
        out << "k=" << k << " infeasible\n";
      } else {
        out << "k=" << k << " ub_real=" << h.ub_real << " ub_int=" << h.ub_int << "\n";
      }
    };

    const auto range = cardinality_range(inst, lb);
    if (!range) {
      out << "range=none\n";
    } else {
      out << "range=" << range->k_min << ".." << range->k_max << "\n";
      if (!opt.probe_k)
        for (int k = range->k_min; k <= range->k_max; ++k) print_k(k);
    }
    if (opt.probe_k) print_k(*opt.probe_k);
  } catch (const std::exception& e) {
    err << "error: bounds failed: " << e.what() << "\n";
    return kExitError;
  }
  return kExitProved;
}

}  // namespace rescue
