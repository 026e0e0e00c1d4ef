#include <iostream>

#include "CLI11.hpp"
#include "rescue/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rescue: exact solver for the 0-1 multidimensional knapsack problem"};
  app.require_subcommand(1);

  rescue::SolveCmdOptions sopt;
  CLI::App* solve = app.add_subcommand("solve", "Prove the optimum of one instance");
  solve->add_option("path", sopt.path, "OR-Library format instance file")->required();
  solve->add_option("-i,--instance", sopt.instance, "Instance index within the file");
  solve->add_option("-t,--time-limit", sopt.time_limit_s, "Time limit in seconds (0 = none)");
  solve->add_option("--spb-size", sopt.spb_size,
                    "Residual size handed to branch & bound (-1 = auto)");
  solve->add_option("--final-dfs-size", sopt.final_dfs_size, "Tail size enumerated plainly");
  solve->add_option("--nb-iter", sopt.nb_iter, "Obstacle calls per hyperplane visit");
  solve->add_option("--policy", sopt.policy, "Hyperplane schedule: rr or seq");
  solve->add_flag("--strict-gap", sopt.strict_gap, "Use ub - (lb + 1) as the reduced-cost gap");
  solve->add_option("--threads", sopt.threads, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_flag("--trace", sopt.trace, "Write one line per recorded clause to stderr");
  solve->add_option("--data", sopt.data_path, "Known-optima registry file override");

  rescue::VerifyCmdOptions vopt;
  CLI::App* verify =
      app.add_subcommand("verify", "Solve random instances and cross-check an exhaustive reference");
  verify->add_option("--seed", vopt.seed, "Generator seed");
  verify->add_option("--count", vopt.count, "Number of instances")->check(CLI::PositiveNumber);
  verify->add_option("--min-n", vopt.gen.min_n, "Minimum item count");
  verify->add_option("--max-n", vopt.gen.max_n, "Maximum item count (reference needs <= 25)");
  verify->add_option("--min-m", vopt.gen.min_m, "Minimum constraint count");
  verify->add_option("--max-m", vopt.gen.max_m, "Maximum constraint count");
  verify->add_option("--coeff-max", vopt.gen.coeff_max, "Coefficient upper bound");
  verify->add_option("--spb-size", vopt.spb_size, "Residual size handed to branch & bound");
  verify->add_option("--final-dfs-size", vopt.final_dfs_size, "Tail size enumerated plainly");
  verify->add_option("--nb-iter", vopt.nb_iter, "Obstacle calls per hyperplane visit");
  verify->add_option("--policy", vopt.policy, "Hyperplane schedule: rr or seq");
  verify->add_flag("--strict-gap", vopt.strict_gap, "Use ub - (lb + 1) as the reduced-cost gap");

  rescue::BoundsCmdOptions bopt;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Print the greedy bound, cardinality range and hyperplane bounds");
  bounds->add_option("path", bopt.path, "OR-Library format instance file")->required();
  bounds->add_option("-i,--instance", bopt.instance, "Instance index within the file");
  bounds->add_option("--lb", bopt.lb, "Lower bound to decompose against (default: greedy)");
  bounds->add_option("--k", bopt.probe_k, "Probe a single hyperplane, even outside the range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rescue::kExitError;
  }

  if (solve->parsed()) return rescue::cmd_solve(sopt, std::cout, std::cerr);
  if (verify->parsed()) return rescue::cmd_verify(vopt, std::cout, std::cerr);
  if (bounds->parsed()) return rescue::cmd_bounds(bopt, std::cout, std::cerr);
  return rescue::kExitError;
}
