#include "oddcycle/regularize.hpp"

#include "oddcycle/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oddcycle {

namespace {

// deg < factor * (d/n) * size, evaluated as deg * n < factor * d * size.
bool below_threshold(std::size_t deg, double factor, EdgeDensity p, std::size_t size) {
  return static_cast<long double>(deg) * p.n <
         static_cast<long double>(factor) * (static_cast<long double>(p.d) * size);
}

bool above_threshold(std::size_t deg, double factor, EdgeDensity p, std::size_t size) {
  return static_cast<long double>(deg) * p.n >
         static_cast<long double>(factor) * (static_cast<long double>(p.d) * size);
}

EdgeDensity host_density(const Graph &host) {
  const auto profile = degree_profile(host);
  if (!profile.regular_degree) {
    throw CertificationError("regularize: host graph is not regular");
  }
  if (host.vertex_count() == 0) {
    throw InputError("regularize: host graph has no vertices");
  }
  return {*profile.regular_degree, host.vertex_count()};
}

// Degrees inside `members` (given as a membership mask), for members only.
std::vector<std::size_t> degrees_within(const Graph &g, const std::vector<bool> &in) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    if (in[u] && in[v]) {
      ++deg[u];
      ++deg[v];
    }
  }
  return deg;
}

std::vector<bool> mask_of(const VertexSet &s) {
  std::vector<bool> in(s.host_size(), false);
  for (Vertex v : s.members()) {
    in[v] = true;
  }
  return in;
}

} // namespace

void RegularizationParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InputError("alpha must lie in (0, 1]");
  }
  if (!(epsilon > 0.0 && epsilon < alpha)) {
    throw InputError("epsilon must lie in (0, alpha)");
  }
  if (!(rho > 0.0)) {
    throw InputError("rho must be positive");
  }
  if (!(eta > 0.0)) {
    throw InputError("eta must be positive");
  }
}

double RegularizationParams::iteration_cap() const {
  return std::max(1.0 / (2.0 * rho) - 2.0, 0.0);
}

DenseCore dense_core(const Graph &host, const Graph &g_sub,
                     const RegularizationParams &params) {
  params.validate();
  const auto p = host_density(host);
  require_subgraph(host, g_sub);
  if (static_cast<double>(g_sub.edge_count()) <
      params.alpha * static_cast<double>(host.edge_count())) {
    throw PreconditionError("regularize: e(G) = " +
                            std::to_string(g_sub.edge_count()) +
                            " is below alpha * e(Gamma)");
  }

  const auto n = host.vertex_count();
  const double factor = params.alpha - params.epsilon1();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g_sub.degree(v);
  }
  std::size_t size = n;
  DenseCore out;
  while (size > 0) {
    Vertex worst = 0;
    std::size_t worst_deg = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && deg[v] < worst_deg) {
        worst = v;
        worst_deg = deg[v];
      }
    }
    if (!below_threshold(worst_deg, factor, p, size)) {
      break;
    }
    alive[worst] = false;
    --size;
    out.peeled.push_back(worst);
    for (Vertex u : g_sub.neighbors(worst)) {
      if (alive[u]) {
        --deg[u];
      }
    }
  }
  if (size == 0) {
    throw ExtractionError("dense core: peeling removed all " + std::to_string(n) +
                          " vertices");
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) {
      members.push_back(v);
    }
  }
  out.core = VertexSet(n, std::move(members));
  return out;
}

DeviationSets deviation_sets(const Graph &host, const VertexSet &y,
                             double epsilon1, EdgeDensity p) {
  if (y.host_size() != host.vertex_count()) {
    throw InputError("deviation_sets: vertex set does not match host");
  }
  const auto in = mask_of(y);
  const auto deg = degrees_within(host, in);
  DeviationSets out;
  for (Vertex v : y.members()) {
    if (below_threshold(deg[v], 1.0 - epsilon1, p, y.size())) {
      out.below.push_back(v);
    } else if (above_threshold(deg[v], 1.0 + epsilon1, p, y.size())) {
      out.above.push_back(v);
    }
  }
  return out;
}

ConditionChecks evaluate_conditions(const Graph &host, const Graph &g_sub,
                                    const VertexSet &x,
                                    const RegularizationParams &params) {
  const auto p = host_density(host);
  const auto n = host.vertex_count();
  ConditionChecks c;
  c.size_required = std::sqrt(params.epsilon) * static_cast<double>(n) / 8.0;
  c.size_ok = static_cast<double>(x.size()) >= c.size_required;
  if (x.empty()) {
    return c;
  }
  const auto in = mask_of(x);
  const auto g_deg = degrees_within(g_sub, in);
  const auto h_deg = degrees_within(host, in);
  const double target = p.value() * static_cast<double>(x.size());

  c.min_g_degree_ok = true;
  c.gamma_degree_ok = true;
  c.g_degree_margin = std::numeric_limits<double>::infinity();
  for (Vertex v : x.members()) {
    if (below_threshold(g_deg[v], params.alpha - params.epsilon, p, x.size())) {
      c.min_g_degree_ok = false;
    }
    if (below_threshold(h_deg[v], 1.0 - params.epsilon, p, x.size()) ||
        above_threshold(h_deg[v], 1.0 + params.epsilon, p, x.size())) {
      c.gamma_degree_ok = false;
    }
    if (target > 0.0) {
      const double g_ratio = static_cast<double>(g_deg[v]) / target;
      const double h_ratio = static_cast<double>(h_deg[v]) / target;
      c.g_degree_margin = std::min(c.g_degree_margin,
                                   g_ratio - (params.alpha - params.epsilon));
      c.gamma_delta = std::max(c.gamma_delta, std::abs(h_ratio - 1.0));
    }
  }
  if (target == 0.0) {
    c.g_degree_margin = 0.0;
  }
  return c;
}

EtaConstraints eta_constraints(const RegularizationParams &params) {
  EtaConstraints out;
  const double e1 = params.epsilon1();
  out.claim_regime =
      params.eta <= std::pow(e1, 3.0) / std::pow(2.0, 3.0 + 1.0 / params.rho);
  const double k = params.iteration_cap();
  if (k > 0.0) {
    out.size_regime = params.eta <= 1.0 / (2.0 * k);
    out.max_degree_regime = params.eta <= e1 / (k * (1.0 + 2.0 * e1));
  }
  return out;
}

RegularizationResult cascade(const Graph &host, const Graph &g_sub,
                             const DenseCore &core,
                             const RegularizationParams &params) {
  params.validate();
  const auto p = host_density(host);
  require_subgraph(host, g_sub);
  const auto &y = core.core;
  if (y.host_size() != host.vertex_count() || y.empty()) {
    throw InputError("cascade: core must be a nonempty subset of the host");
  }
  const double e1 = params.epsilon1();
  const auto n = host.vertex_count();

  RegularizationResult r;
  r.core = y;
  r.peeled = core.peeled;
  r.eta = eta_constraints(params);

  const auto dev = deviation_sets(host, y, e1, p);
  r.trace.push_back({"Y_minus", dev.below});
  r.trace.push_back({"Y_plus", dev.above});

  std::vector<bool> in_y = mask_of(y);
  std::vector<bool> deleted(n, false);
  std::vector<bool> current(n, false); // membership of the latest round Y_i
  std::size_t current_size = 0;
  for (const auto *part : {&dev.below, &dev.above}) {
    for (Vertex v : *part) {
      deleted[v] = true;
      current[v] = true;
      ++current_size;
    }
  }
  r.round_sizes.push_back(current_size);

  const auto rounds = static_cast<std::size_t>(std::ceil(params.iteration_cap()));
  for (std::size_t i = 0; i < rounds && current_size > 0; ++i) {
    // e_{G[Y]}(v, Y_i) >= eps1 p |Y| / 2^{i+2}
    const double factor = e1 / std::pow(2.0, static_cast<double>(i) + 2.0);
    std::vector<Vertex> next;
    for (Vertex v : y.members()) {
      if (deleted[v]) {
        continue;
      }
      std::size_t into_round = 0;
      for (Vertex u : g_sub.neighbors(v)) {
        if (in_y[u] && current[u]) {
          ++into_round;
        }
      }
      if (!below_threshold(into_round, factor, p, y.size())) {
        next.push_back(v);
      }
    }
    if (next.empty()) {
      break;
    }
    std::fill(current.begin(), current.end(), false);
    for (Vertex v : next) {
      deleted[v] = true;
      current[v] = true;
    }
    current_size = next.size();
    r.trace.push_back({"Y_" + std::to_string(i + 1), std::move(next)});
    r.round_sizes.push_back(current_size);
  }

  for (std::size_t i = 0; i < r.round_sizes.size(); ++i) {
    const double exponent = static_cast<double>(i + 1);
    r.claim_bounds.push_back(std::pow(params.eta, exponent) *
                             std::pow(p.value(), 2.0 * exponent * params.rho) *
                             static_cast<double>(y.size()));
    if (i >= 2 && r.round_sizes[i] > r.round_sizes[i - 1]) {
      r.outside_claim_regime = true;
    }
  }

  std::vector<Vertex> kept;
  for (Vertex v : y.members()) {
    if (!deleted[v]) {
      kept.push_back(v);
    }
  }
  if (kept.empty()) {
    throw ExtractionError("cascade: every vertex of the core was deleted after " +
                          std::to_string(r.round_sizes.size()) + " rounds");
  }
  r.x = VertexSet(n, std::move(kept));
  r.checks = evaluate_conditions(host, g_sub, r.x, params);
  return r;
}

RegularizationResult regularize(const Graph &host, const Graph &g_sub,
                                const RegularizationParams &params) {
  return cascade(host, g_sub, dense_core(host, g_sub, params), params);
}

} // namespace oddcycle
