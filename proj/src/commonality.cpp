#include "oddcycle/commonality.hpp"

#include "oddcycle/errors.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace oddcycle {

namespace {

constexpr double value_tolerance = 1e-12;

void require_same_domain(const EdgeFunction &a, const EdgeFunction &b,
                         const char *what) {
  if (!(a.domain() == b.domain())) {
    throw InputError(std::string(what) + ": edge functions have different domains");
  }
}

void require_dominated(const EdgeFunction &gamma, const EdgeFunction &f,
                       const char *what) {
  require_same_domain(gamma, f, what);
  const auto n = static_cast<Eigen::Index>(gamma.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(f.values()(i, j)) > gamma.values()(i, j) + value_tolerance) {
        throw InputError(std::string(what) + ": |f| exceeds gamma at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

// Expectation of prod_i w_i(x_i, x_{i+1}) around a cycle or along a path,
// where w_i is the weight of edge i. Normalised by |X|^{|V(H)|}.
double chain_expectation(const Pattern &h, Eigen::Index s,
                         const std::vector<const Eigen::MatrixXd *> &weights) {
  if (h.kind == Pattern::Kind::figure_eight) {
    throw InputError("weighted densities are defined for cycles and paths only");
  }
  if (s == 0) {
    throw DomainError("homomorphism density over an empty vertex set");
  }
  if (weights.empty()) {
    return 1.0; // P_0: one vertex, empty product
  }
  const double size = static_cast<double>(s);
  const double norm = std::pow(size, static_cast<double>(h.vertex_count()));

  if (h.kind == Pattern::Kind::path) {
    Eigen::VectorXd v = Eigen::VectorXd::Ones(s);
    for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
      v = (**it) * v;
    }
    return v.sum() / norm;
  }
  if (h.length == 2) {
    return weights.front()->sum() / norm;
  }
  Eigen::MatrixXd product = *weights.front();
  for (std::size_t i = 1; i + 1 < weights.size(); ++i) {
    product = product * (*weights[i]);
  }
  // tr(P W) = sum_ij P_ij W_ji
  const double trace = product.cwiseProduct(weights.back()->transpose()).sum();
  return trace / norm;
}

std::vector<const Eigen::MatrixXd *>
select_weights(const Pattern &h, const Eigen::MatrixXd &f1,
               const Eigen::MatrixXd &f2, std::uint64_t subset) {
  std::vector<const Eigen::MatrixXd *> w(h.edge_count());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = ((subset >> i) & 1U) ? &f1 : &f2;
  }
  return w;
}

double power_or_one(double base, std::size_t exponent) {
  return exponent == 0 ? 1.0 : std::pow(base, static_cast<double>(exponent));
}

void require_density_pattern(const Pattern &h) {
  if (h.kind == Pattern::Kind::figure_eight) {
    throw InputError("pattern must be a cycle or a path");
  }
}

} // namespace

EdgeFunction EdgeFunction::indicator(const Graph &g, const VertexSet &x) {
  const auto sub = induced_subgraph(g, x);
  const auto s = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(s, s);
  for (auto [u, v] : sub.graph.edges()) {
    values(u, v) = 1.0;
    values(v, u) = 1.0;
  }
  return EdgeFunction(x, std::move(values));
}

EdgeFunction EdgeFunction::zero(const VertexSet &x) {
  const auto s = static_cast<Eigen::Index>(x.size());
  return EdgeFunction(x, Eigen::MatrixXd::Zero(s, s));
}

EdgeFunction EdgeFunction::from_values(VertexSet x, Eigen::MatrixXd values) {
  const auto s = static_cast<Eigen::Index>(x.size());
  if (values.rows() != s || values.cols() != s) {
    throw InputError("edge function matrix does not match its domain");
  }
  for (Eigen::Index i = 0; i < s; ++i) {
    if (values(i, i) != 0.0) {
      throw InputError("edge function must vanish on the diagonal");
    }
    for (Eigen::Index j = 0; j < s; ++j) {
      if (values(i, j) != values(j, i)) {
        throw InputError("edge function must be symmetric");
      }
      if (!(std::abs(values(i, j)) <= 1.0)) {
        throw InputError("edge function values must lie in [-1, 1]");
      }
    }
  }
  return EdgeFunction(std::move(x), std::move(values));
}

bool EdgeFunction::is_indicator() const {
  return ((values_.array() == 0.0) || (values_.array() == 1.0)).all();
}

EdgeFunction signed_difference(const EdgeFunction &gamma, const EdgeFunction &g) {
  require_same_domain(gamma, g, "signed_difference");
  if (!gamma.is_indicator() || !g.is_indicator()) {
    throw InputError("signed_difference: gamma and g must be {0,1}-valued");
  }
  if ((g.values().array() > gamma.values().array()).any()) {
    throw InputError("signed_difference: g is not contained in gamma");
  }
  return EdgeFunction::from_values(gamma.domain(),
                                   2.0 * g.values() - gamma.values());
}

double homomorphism_density(const Pattern &h, const Eigen::MatrixXd &w) {
  return chain_expectation(h, w.rows(), select_weights(h, w, w, 0));
}

double t_weighted(const Pattern &h, const EdgeFunction &fn) {
  return homomorphism_density(h, fn.values());
}

double subset_expectation(const Pattern &h, const Eigen::MatrixXd &f1,
                          const Eigen::MatrixXd &f2, std::uint64_t subset) {
  if (f1.rows() != f2.rows()) {
    throw InputError("subset_expectation: matrix sizes differ");
  }
  return chain_expectation(h, f1.rows(), select_weights(h, f1, f2, subset));
}

double q_polynomial(const Pattern &h, const EdgeFunction &gamma,
                    const EdgeFunction &f, double z) {
  require_density_pattern(h);
  require_dominated(gamma, f, "q_polynomial");
  const Eigen::MatrixXd scaled = z * gamma.values();
  const double plus = homomorphism_density(h, scaled + f.values());
  const double minus = homomorphism_density(h, scaled - f.values());
  return 0.5 * (plus + minus) -
         power_or_one(z, h.edge_count()) * homomorphism_density(h, gamma.values());
}

double q_polynomial_subsets(const Pattern &h, const EdgeFunction &gamma,
                            const EdgeFunction &f, double z) {
  require_density_pattern(h);
  require_dominated(gamma, f, "q_polynomial_subsets");
  const auto e = h.edge_count();
  if (e > 20) {
    throw ResourceError("q_polynomial_subsets: too many edges");
  }
  double total = 0.0;
  for (std::uint64_t j = 1; j < (std::uint64_t{1} << e); ++j) {
    const auto size = static_cast<std::size_t>(std::popcount(j));
    if (size % 2 != 0) {
      continue;
    }
    total += subset_expectation(h, f.values(), gamma.values(), j) *
             power_or_one(z, e - size);
  }
  return total;
}

double q_polynomial_brute(const Pattern &h, const EdgeFunction &gamma,
                          const EdgeFunction &f, double z) {
  require_density_pattern(h);
  require_dominated(gamma, f, "q_polynomial_brute");
  const auto e = h.edge_count();
  const auto s = gamma.size();
  if (e > q_brute_max_edges || s > q_brute_max_domain) {
    throw ResourceError("q_polynomial_brute: limited to e(H) <= " +
                        std::to_string(q_brute_max_edges) + " and |X| <= " +
                        std::to_string(q_brute_max_domain));
  }
  if (s == 0) {
    throw DomainError("q_polynomial_brute: empty domain");
  }
  const Graph pattern = h.graph();
  const auto edges = pattern.edges();
  const auto hv = pattern.vertex_count();

  // Edges whose larger endpoint is v; checked when v is assigned.
  std::vector<std::vector<std::size_t>> closing(hv);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    closing[edges[i].second].push_back(i);
  }

  std::vector<double> per_subset(std::size_t{1} << e, 0.0);
  std::vector<Eigen::Index> image(hv, 0);
  std::vector<double> f_edge(e), g_edge(e);

  std::function<void(std::size_t)> assign = [&](std::size_t v) {
    if (v == hv) {
      for (std::uint64_t j = 1; j < per_subset.size(); ++j) {
        if (std::popcount(j) % 2 != 0) {
          continue;
        }
        double term = 1.0;
        for (std::size_t i = 0; i < e; ++i) {
          term *= ((j >> i) & 1U) ? f_edge[i] : g_edge[i];
        }
        per_subset[j] += term;
      }
      return;
    }
    for (Eigen::Index target = 0; target < static_cast<Eigen::Index>(s); ++target) {
      image[v] = target;
      bool live = true;
      for (auto i : closing[v]) {
        const auto a = image[edges[i].first];
        g_edge[i] = gamma.values()(a, target);
        f_edge[i] = f.values()(a, target);
        // |f| <= gamma, so a gamma-zero edge kills every term.
        if (g_edge[i] == 0.0) {
          live = false;
          break;
        }
      }
      if (live) {
        assign(v + 1);
      }
    }
  };
  assign(0);

  const double norm = std::pow(static_cast<double>(s), static_cast<double>(hv));
  double total = 0.0;
  for (std::uint64_t j = 1; j < per_subset.size(); ++j) {
    const auto size = static_cast<std::size_t>(std::popcount(j));
    if (size % 2 == 0) {
      total += per_subset[j] / norm * power_or_one(z, e - size);
    }
  }
  return total;
}

std::vector<double> q_coefficients(const Pattern &h, const EdgeFunction &gamma,
                                   const EdgeFunction &f) {
  const auto e = static_cast<Eigen::Index>(h.edge_count());
  if (e > 16) {
    throw ResourceError("q_coefficients: degree too large for interpolation");
  }
  if (e == 0) {
    return {q_polynomial(h, gamma, f, 0.0)};
  }
  Eigen::MatrixXd vandermonde(e + 1, e + 1);
  Eigen::VectorXd samples(e + 1);
  for (Eigen::Index i = 0; i <= e; ++i) {
    const double z = static_cast<double>(i) / static_cast<double>(e);
    double power = 1.0;
    for (Eigen::Index j = 0; j <= e; ++j) {
      vandermonde(i, j) = power;
      power *= z;
    }
    samples(i) = q_polynomial(h, gamma, f, z);
  }
  const Eigen::VectorXd c = vandermonde.colPivHouseholderQr().solve(samples);
  return std::vector<double>(c.data(), c.data() + c.size());
}

double q_derivative_central(const Pattern &h, const EdgeFunction &gamma,
                            const EdgeFunction &f, double z, double step) {
  return (q_polynomial(h, gamma, f, z + step) - q_polynomial(h, gamma, f, z - step)) /
         (2.0 * step);
}

CancelIdentityCheck cancel_identity_check(const Pattern &h,
                                          const EdgeFunction &gamma,
                                          const EdgeFunction &g) {
  require_density_pattern(h);
  const EdgeFunction f = signed_difference(gamma, g);
  CancelIdentityCheck out;
  out.lhs = homomorphism_density(h, g.values()) +
            homomorphism_density(h, gamma.values() - g.values());
  const double e = static_cast<double>(h.edge_count());
  out.rhs = std::pow(0.5, e - 1.0) * (homomorphism_density(h, gamma.values()) +
                                      q_polynomial_subsets(h, gamma, f, 1.0));
  out.max_abs_diff = std::abs(out.lhs - out.rhs);
  return out;
}

DerivativeCheck derivative_residual_check(const NdlCertificate &cert,
                                          const EdgeFunction &gamma,
                                          const EdgeFunction &f, unsigned k,
                                          double z) {
  if (k < 1) {
    throw InputError("derivative check: k must be at least 1");
  }
  if (cert.d == 0 || gamma.size() == 0) {
    throw DomainError("derivative check: needs d > 0 and nonempty X");
  }
  const auto cycle = Pattern::cycle(2 * k + 1);
  const auto path = Pattern::path(2 * k);
  DerivativeCheck out;
  out.derivative = q_derivative_central(cycle, gamma, f, z);
  if (2 * k + 1 <= 5) {
    const auto c = q_coefficients(cycle, gamma, f);
    double slope = 0.0;
    for (std::size_t j = c.size(); j-- > 1;) {
      slope = slope * z + static_cast<double>(j) * c[j];
    }
    out.derivative_interpolated = slope;
  }
  const double p = cert.p;
  const double m = 2.0 * k + 1.0;
  out.path_term = p * m * q_polynomial(path, gamma, f, z);
  out.residual = std::abs(out.derivative - out.path_term);

  const double mu = static_cast<double>(gamma.size()) / static_cast<double>(cert.n);
  const double d = static_cast<double>(cert.d);
  const double n = static_cast<double>(cert.n);
  const double mu_power = std::pow(mu, m);
  out.bound = m * std::pow(p, m) *
              (cert.lambda / (mu_power * d) +
               std::pow(cert.lambda, 2.0 * k - 1) * n / (mu_power * std::pow(d, 2.0 * k)));
  out.holds = out.residual <= out.bound + 1e-6;
  // The per-subset estimate is summed over every e and every J in
  // E_+(P_2k), whose size is 2^{2k-1} - 1.
  out.summed_bound = out.bound * (std::ldexp(1.0, static_cast<int>(2 * k - 1)) - 1.0);
  out.holds_summed = out.residual <= out.summed_bound + 1e-6;
  return out;
}

std::vector<double> t_sequence(unsigned k, const EdgeFunction &gamma,
                               const EdgeFunction &f, double z, double p) {
  if (k < 1) {
    throw InputError("t_sequence: k must be at least 1");
  }
  if (2 * k > t_sequence_max_edges) {
    throw ResourceError("t_sequence: paths longer than " +
                        std::to_string(t_sequence_max_edges) +
                        " edges are not enumerated");
  }
  if (!(z > 0.0 && z <= 1.0)) {
    throw DomainError("t_sequence: z must lie in (0, 1]");
  }
  require_dominated(gamma, f, "t_sequence");
  const Eigen::MatrixXd h = z * gamma.values();
  std::vector<double> t(2 * k + 1, 0.0);
  for (unsigned m = 2; m <= 2 * k; ++m) {
    const auto path = Pattern::path(m);
    const std::uint64_t ends = (std::uint64_t{1} << (m - 1)) | 1U;
    double sum = 0.0;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << m); ++j) {
      if ((j & ends) != ends || std::popcount(j) % 2 != 0) {
        continue;
      }
      sum += subset_expectation(path, f.values(), h, j);
    }
    t[m] = power_or_one(p * z, 2 * k - m) * sum;
  }
  return t;
}

double t_combination(const std::vector<double> &t, unsigned ell) {
  if (ell < 1 || 2 * static_cast<std::size_t>(ell) >= t.size()) {
    throw InputError("t_combination: ell out of range");
  }
  return t[2 * ell] + 2.0 * t[2 * ell - 1] + t[2 * ell - 2];
}

PathSumCheck path_sum_check(const EdgeFunction &gamma, const EdgeFunction &f,
                            unsigned k, double z, double p, double delta) {
  if (k < 1) {
    throw InputError("path_sum_check: k must be at least 1");
  }
  PathSumCheck out;
  out.value = q_polynomial(Pattern::path(2 * k), gamma, f, z);
  out.bound = -std::pow(p, 2.0 * k) * std::pow(2.0, 5.0 * k) * delta;
  out.holds = out.value >= out.bound - 1e-9;
  return out;
}

std::vector<CoverCount> derivative_cover_counts(unsigned k) {
  if (k < 1 || 2 * k + 1 > 20) {
    throw InputError("derivative_cover_counts: k out of range");
  }
  const unsigned m = 2 * k + 1;
  const std::uint64_t all = (std::uint64_t{1} << m) - 1;
  std::map<std::uint64_t, unsigned> tally;
  for (unsigned removed = 0; removed < m; ++removed) {
    // Even nonempty subsets of the path C_{2k+1} - e.
    const std::uint64_t rest = all & ~(std::uint64_t{1} << removed);
    for (std::uint64_t j = rest; j != 0; j = (j - 1) & rest) {
      if (std::popcount(j) % 2 == 0) {
        ++tally[j];
      }
    }
  }
  std::vector<CoverCount> out;
  for (std::uint64_t j = 1; j <= all; ++j) {
    const auto size = static_cast<unsigned>(std::popcount(j));
    if (size % 2 != 0) {
      continue;
    }
    const auto it = tally.find(j);
    out.push_back({j, size, it == tally.end() ? 0U : it->second, m - size});
  }
  return out;
}

double measured_delta(const Graph &host, const VertexSet &x, double p) {
  if (x.empty()) {
    return 0.0;
  }
  const auto sub = induced_subgraph(host, x);
  const double target = p * static_cast<double>(x.size());
  double worst = 0.0;
  for (Vertex v = 0; v < sub.graph.vertex_count(); ++v) {
    const double deg = static_cast<double>(sub.graph.degree(v));
    if (target == 0.0) {
      if (deg != 0.0) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    worst = std::max(worst, std::abs(deg / target - 1.0));
  }
  return worst;
}

namespace {

double commonality_formula(double p, std::size_t x_size, double delta, unsigned k) {
  const double scale = std::pow(p * static_cast<double>(x_size), 2.0 * k + 1) /
                       std::pow(2.0, 2.0 * k);
  return scale * (1.0 - std::pow(2.0, 8.0 * k) * delta);
}

} // namespace

double theorem31_bound(const NdlCertificate &cert, const VertexSet &x,
                       double delta, unsigned k) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw DomainError("theorem31_bound: delta must lie in [0, 1)");
  }
  if (x.empty()) {
    throw DomainError("theorem31_bound: X must be nonempty");
  }
  if (k < 1) {
    throw DomainError("theorem31_bound: k must be at least 1");
  }
  return commonality_formula(cert.p, x.size(), delta, k);
}

CommonalityReport verify_commonality(const Graph &host, const NdlCertificate &cert,
                                     const VertexSet &x, const Graph &g_sub,
                                     unsigned k) {
  if (k < 1) {
    throw InputError("verify_commonality: k must be at least 1");
  }
  if (host.vertex_count() != cert.n) {
    throw InputError("verify_commonality: certificate does not match host");
  }
  if (x.host_size() != host.vertex_count()) {
    throw InputError("verify_commonality: vertex set does not match host");
  }
  if (x.empty()) {
    throw DomainError("verify_commonality: X must be nonempty");
  }
  require_subgraph(host, g_sub);
  for (auto [u, v] : g_sub.edges()) {
    if (!x.contains(u) || !x.contains(v)) {
      throw ContainmentError("verify_commonality: edge {" + std::to_string(u) +
                             "," + std::to_string(v) + "} leaves X");
    }
  }
  const auto host_x = induced_subgraph(host, x).graph;
  const auto sub_x = induced_subgraph(g_sub, x).graph;
  const auto rest_x = complement_within(host_x, sub_x);

  CommonalityReport r;
  r.k = k;
  r.x_size = x.size();
  r.p = cert.p;
  r.delta = measured_delta(host, x, cert.p);
  r.injective_g = injective_count_cycle(sub_x, 2 * k + 1);
  r.injective_complement = injective_count_cycle(rest_x, 2 * k + 1);
  r.bound = std::isfinite(r.delta) ? commonality_formula(cert.p, x.size(), r.delta, k)
                                   : -std::numeric_limits<double>::infinity();
  const double total = to_double(r.injective_g + r.injective_complement);
  r.vacuous = !(r.bound > 0.0);
  r.holds = total + bound_slack(r.bound) >= r.bound;
  if (cert.d > 0) {
    r.hypothesis_ratio = hypothesis_ratio(cert, k);
  }
  if (r.delta > 0.0 && std::isfinite(r.delta)) {
    const double base = commonality_formula(cert.p, x.size(), 0.0, k);
    if (base > 0.0) {
      r.critical_constant = (1.0 - total / base) / r.delta;
    }
  }
  return r;
}

} // namespace oddcycle
