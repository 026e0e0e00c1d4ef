#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include "rescue/driver.hpp"
#include "rescue/model.hpp"

namespace rescue {

// Exit codes shared by the CLI commands.
inline constexpr int kExitProved = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitTimeLimit = 2;
inline constexpr int kExitRegistryMismatch = 3;

struct InstanceGenConfig {
  int min_n = 4;
  int max_n = 14;
  int min_m = 1;
  int max_m = 5;
  std::int64_t coeff_max = 100;  // c and A uniform in [0, coeff_max]
};

// Uniform integer coefficients; capacities b_i = floor(row-sum / 2).
Instance random_instance(std::mt19937_64& rng, const InstanceGenConfig& gen,
                         const std::string& name);

struct SolveCmdOptions {
  std::string path;
  int instance = 0;
  double time_limit_s = 0.0;
  int spb_size = -1;
  int final_dfs_size = 20;
  int nb_iter = 50;
  std::string policy = "rr";  // rr | seq
  bool strict_gap = false;
  int threads = 1;
  bool trace = false;
  std::optional<std::string> data_path;  // registry override (else env/default)
};

// Solves one instance from an OR-Library file and writes the report to out.
// Exit codes: 0 proof, 2 time limit, 1 error, 3 registry mismatch.
int cmd_solve(const SolveCmdOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyCmdOptions {
  std::uint64_t seed = 1;
  int count = 100;
  InstanceGenConfig gen;
  int spb_size = -1;
  int final_dfs_size = 20;
  int nb_iter = 50;
  std::string policy = "rr";
  bool strict_gap = false;
};

// Random instances solved against the exhaustive oracle; prints one line per
// mismatch and a summary.  Exit 0 iff every instance matches with a proof.
int cmd_verify(const VerifyCmdOptions& opt, std::ostream& out, std::ostream& err);

// Verification core, parameterized over the solver under test so suites can
// prove the harness detects a corrupted build.  Returns the mismatch count.
using SolverFn = std::function<SolveReport(const Instance&)>;
int run_verify(const VerifyCmdOptions& opt, const SolverFn& solver, std::ostream& out);

struct BoundsCmdOptions {
  std::string path;
  int instance = 0;
  std::optional<std::int64_t> lb;  // default: greedy
  std::optional<int> probe_k;      // print one hyperplane even outside range
};

// Prints the greedy bound, the cardinality range and per-hyperplane ub_int.
int cmd_bounds(const BoundsCmdOptions& opt, std::ostream& out, std::ostream& err);

// Registry path resolution: explicit override, RESCUE_MKP_DATA, then
// ./data/known_optima.txt.  Missing file yields an empty registry.
KnownOptimaRegistry load_registry(const std::optional<std::string>& override_path);

}  // namespace rescue
