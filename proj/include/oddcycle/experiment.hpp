#pragma once

#include "oddcycle/graph.hpp"
#include "oddcycle/random.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace oddcycle {

using Json = nlohmann::ordered_json;

struct ExperimentConfig {
  std::string command;    // gen | certify | count | verify-commonality | ...
  std::string host;       // edge-list path or generator spec
  std::string sub;        // edge-list path, host labels
  std::string subset;     // vertex-set path
  std::string generator;  // gen: generator spec such as "paley:13"
  std::string pattern = "c3";
  unsigned k = 1;
  double alpha = 0.55;
  double delta = 0.05;
  double epsilon = 0.25;
  double rho = 1.0;
  double eta = 1e-3;
  double margin = 1.0; // verify-commonality, probe-bipartite: pass at >= margin * bound
  double keep = 0.5;   // edge keep probability for random subgraphs
  std::size_t trials = 1;
  Seed seed = 1;
  std::string out;
  bool injective = false; // count: also count labelled copies
  bool timing = false;    // include wall-clock time in the report

  /// Throws InputError on unknown commands or out-of-range parameters.
  void validate() const;

  /// Flat "key = value" lines, one per field, in declaration order.
  std::string to_text() const;
  /// Inverse of to_text; unknown keys and malformed numbers are InputError.
  /// Keys absent from the text keep their default values.
  static ExperimentConfig from_text(const std::string &text);
  static ExperimentConfig from_file(const std::string &path);
  /// Assigns a single key from its textual value.
  void set(const std::string &key, const std::string &value);
  /// Textual value of a single key, as written by to_text.
  std::string get(const std::string &key) const;

  Json to_json() const;

  friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;
};

const std::vector<std::string> &experiment_commands();

/// Reads `spec` as an edge-list file when such a file exists; otherwise as a
/// generator: paley:q, random-regular:n,d[,seed], complete:n, cycle:n,
/// path:m, complete-bipartite:a,b, empty:n, or a built-in corpus name.
Graph resolve_graph(const std::string &spec, Seed seed = 1);

struct TrialRecord {
  std::size_t index = 0;
  Seed seed = 0;
  bool pass = false;
  bool vacuous = false; // excluded from the aggregate
  Json data = Json::object();
};

struct Report {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  Json result = Json::object(); // campaign-level summary
  bool pass = false;            // every non-vacuous trial passed
  std::optional<double> seconds;
  std::optional<Graph> graph; // gen only

  Json to_json() const;
  /// Per-trial table: index, seed, pass, vacuous, then the scalar fields
  /// of each trial's data in first-trial order.
  std::string to_csv() const;
};

/// Runs one campaign. Module errors raised inside a trial are rethrown as
/// the same category of error with the trial index prefixed.
Report run(const ExperimentConfig &config);

/// Writes the JSON report to `config.out` and the CSV table next to it
/// (".json" replaced by ".csv", else ".csv" appended). With an empty
/// `out` the JSON goes to `fallback` only. For gen the artifact is the
/// edge list instead.
void write_report(const Report &report, std::ostream &fallback);

/// Fixed-width pass/fail table, one row per trial.
std::string pass_fail_table(const Report &report);

} // namespace oddcycle
