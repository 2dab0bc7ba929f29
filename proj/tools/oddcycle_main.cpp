#include "oddcycle/errors.hpp"
#include "oddcycle/experiment.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;

std::string join_generator(const std::vector<std::string> &args) {
  if (args.empty()) {
    return {};
  }
  std::string spec = args.front();
  for (std::size_t i = 1; i < args.size(); ++i) {
    spec += (i == 1 && spec.find(':') == std::string::npos) ? ":" : ",";
    spec += args[i];
  }
  return spec;
}

} // namespace

int main(int argc, char **argv) {
  using oddcycle::ExperimentConfig;

  CLI::App app{"Odd-cycle counting and verification campaigns on pseudorandom graphs"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string command;
  std::vector<std::string> generator_args;
  std::string config_path;
  ExperimentConfig flags;

  app.add_option("command", command, "Campaign to run")
      ->required()
      ->check(CLI::IsMember(oddcycle::experiment_commands()));
  app.add_option("generator", generator_args,
                 "gen only: family and parameters, e.g. 'paley 13' or 'random-regular 30 3'");
  app.add_option("--config", config_path, "Flat key = value config file; flags override it");

  std::vector<std::pair<std::string, CLI::Option *>> tracked;
  auto track = [&](const std::string &key, CLI::Option *opt) { tracked.emplace_back(key, opt); };
  track("host", app.add_option("--host", flags.host, "Host edge-list file or generator spec"));
  track("sub", app.add_option("--sub", flags.sub, "Subgraph edge-list file on host labels"));
  track("subset", app.add_option("--subset", flags.subset, "Vertex-set file restricting X"));
  track("pattern", app.add_option("--pattern", flags.pattern, "c<m> | p<m> | fig8:q,r"));
  track("k", app.add_option("--k", flags.k, "Odd cycle C_{2k+1}"));
  track("alpha", app.add_option("--alpha", flags.alpha, "Relative density of G in the host"));
  track("delta", app.add_option("--delta", flags.delta, "Density excess over 1/2 (verify-turan)"));
  track("epsilon", app.add_option("--epsilon", flags.epsilon, "Regularization slack"));
  track("rho", app.add_option("--rho", flags.rho, "Regularization exponent"));
  track("eta", app.add_option("--eta", flags.eta, "Regularization eta"));
  track("margin", app.add_option("--margin", flags.margin,
                                 "Pass at >= margin * bound (commonality, probe)"));
  track("keep", app.add_option("--keep", flags.keep, "Edge keep probability for random G"));
  track("trials", app.add_option("--trials", flags.trials, "Number of independent trials"));
  track("seed", app.add_option("--seed", flags.seed, "Base seed"));
  track("out", app.add_option("--out", flags.out, "Output path (JSON report or edge list)"));
  track("injective", app.add_flag("--injective", flags.injective,
                                  "count: also count labelled copies"));
  track("timing", app.add_flag("--timing", flags.timing, "Include wall-clock time"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_error;
  }

  try {
    ExperimentConfig config;
    if (!config_path.empty()) {
      config = ExperimentConfig::from_file(config_path);
    }
    for (const auto &[key, opt] : tracked) {
      if (opt->count() > 0) {
        config.set(key, flags.get(key));
      }
    }
    config.command = command;
    if (!generator_args.empty()) {
      config.generator = join_generator(generator_args);
    }

    const auto report = oddcycle::run(config);
    if (config.command == "oracle-suite") {
      std::cout << oddcycle::pass_fail_table(report);
      if (!config.out.empty()) {
        oddcycle::write_report(report, std::cout);
      }
    } else {
      oddcycle::write_report(report, std::cout);
    }
    return report.pass ? exit_pass : exit_fail;
  } catch (const oddcycle::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
}
