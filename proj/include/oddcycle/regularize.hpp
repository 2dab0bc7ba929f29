#pragma once

#include "oddcycle/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace oddcycle {

/// Edge density p = d/n kept as the exact ratio so threshold tests of the
/// form deg < c * p * |Y| can be evaluated as deg * n < c * d * |Y|.
struct EdgeDensity {
  std::size_t d = 0;
  std::size_t n = 1;
  double value() const { return static_cast<double>(d) / static_cast<double>(n); }
};

struct RegularizationParams {
  double alpha = 1.0;   // relative density of G in Gamma
  double epsilon = 0.5; // target slack, 0 < epsilon < alpha
  double rho = 1.0;
  double eta = 1e-3;

  /// Throws InputError unless 0 < epsilon < alpha <= 1, rho > 0, eta > 0.
  void validate() const;
  double epsilon1() const { return epsilon / 4.0; }
  /// K = 1/(2 rho) - 2, floored at 0.
  double iteration_cap() const;
};

struct DenseCore {
  VertexSet core;
  std::vector<Vertex> peeled; // in removal order
};

/// Minimum-degree peeling: while the vertex of least G[Y]-degree has degree
/// below (alpha - epsilon1) p |Y| for the current Y, remove it (ties by
/// smallest label). Throws PreconditionError if e(G) < alpha e(Gamma),
/// ContainmentError if G is not inside the host, CertificationError if the
/// host is not regular, ExtractionError if Y empties.
DenseCore dense_core(const Graph &host, const Graph &g_sub,
                     const RegularizationParams &params);

struct DeviationSets {
  std::vector<Vertex> below; // deg_{Gamma[Y]} < (1 - eps1) p |Y|
  std::vector<Vertex> above; // deg_{Gamma[Y]} > (1 + eps1) p |Y|
};

DeviationSets deviation_sets(const Graph &host, const VertexSet &y,
                             double epsilon1, EdgeDensity p);

struct DeletionRound {
  std::string label; // "Y_minus", "Y_plus", "Y_1", "Y_2", ...
  std::vector<Vertex> vertices;
};

struct ConditionChecks {
  bool size_ok = false;         // |X| >= sqrt(eps) n / 8
  bool min_g_degree_ok = false; // deg_{G[X]} >= (alpha - eps) p |X|
  bool gamma_degree_ok = false; // deg_{Gamma[X]} = (1 +- eps) p |X|
  double size_required = 0.0;
  // min_x deg_{G[X]}(x) / (p|X|) - (alpha - eps); negative means failure.
  double g_degree_margin = 0.0;
  // max_x |deg_{Gamma[X]}(x) / (p|X|) - 1|.
  double gamma_delta = 0.0;

  bool all() const { return size_ok && min_g_degree_ok && gamma_degree_ok; }
};

/// The three target properties measured from scratch on X.
ConditionChecks evaluate_conditions(const Graph &host, const Graph &g_sub,
                                    const VertexSet &x,
                                    const RegularizationParams &params);

struct EtaConstraints {
  bool claim_regime = false;              // eta <= eps1^3 / 2^{3 + 1/rho}
  std::optional<bool> size_regime;        // eta <= 1/(2K), K > 0 only
  std::optional<bool> max_degree_regime;  // eta <= eps1/(K (1 + 2 eps1)), K > 0 only
};

EtaConstraints eta_constraints(const RegularizationParams &params);

struct RegularizationResult {
  VertexSet x;
  VertexSet core;
  std::vector<Vertex> peeled;
  std::vector<DeletionRound> trace;
  std::vector<std::size_t> round_sizes; // |Y_0|, |Y_1|, ...
  std::vector<double> claim_bounds;     // eta^{i+1} p^{2(i+1) rho} |Y|
  bool outside_claim_regime = false;    // |Y_i| increased for some i >= 1
  ConditionChecks checks;
  EtaConstraints eta;
};

/// Deletes Y_0 = Y_minus u Y_plus, then Y_{i+1} = vertices with at least
/// eps1 p |Y| / 2^{i+2} G[Y]-neighbours in Y_i, stopping when a round is
/// empty or after ceil(K) rounds. Throws ExtractionError if X is empty.
RegularizationResult cascade(const Graph &host, const Graph &g_sub,
                             const DenseCore &core,
                             const RegularizationParams &params);

/// dense_core followed by cascade.
RegularizationResult regularize(const Graph &host, const Graph &g_sub,
                                const RegularizationParams &params);

} // namespace oddcycle
