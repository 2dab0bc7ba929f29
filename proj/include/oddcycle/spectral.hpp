#pragma once

#include "oddcycle/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace oddcycle {

inline constexpr std::size_t max_dense_vertices = 4096;

/// Full adjacency spectrum, sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
  // max_i ||A v_i - lambda_i v_i||_inf over the computed eigenpairs.
  double residual = 0.0;

  std::size_t size() const { return eigenvalues.size(); }
  // sum_i lambda_i^k
  double power_sum(unsigned k) const;
};

/// Dense symmetric eigendecomposition of the adjacency matrix. Requires
/// 1 <= n <= 4096. Throws NumericError if the solver does not converge or a
/// residual exceeds 1e-9 * n.
Spectrum spectrum(const Graph &g);

/// (n, d, lambda) parameters of a d-regular graph, lambda = max(|l_2|, |l_n|).
struct NdlCertificate {
  std::size_t n = 0;
  std::size_t d = 0;
  double lambda = 0.0;
  double p = 0.0;
  Spectrum spectrum;
};

/// Throws CertificationError for non-regular graphs. Bipartite or
/// disconnected regular graphs are certified with lambda = d.
NdlCertificate certify_ndl(const Graph &g);

/// lambda^(2k-1) * n / d^(2k). Throws DomainError when d = 0 or k = 0.
double hypothesis_ratio(const NdlCertificate &cert, unsigned k);

/// d^(2k) + lambda^(2k-2) * d * n, an upper bound on closed 2k-walks.
/// lambda^0 is taken as 1 even when lambda = 0.
double even_cycle_trace_bound(const NdlCertificate &cert, unsigned k);

struct MixingCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Weighted expander mixing inequality
///   |u^T A v - (d/n) sum(u) sum(v)| <= lambda sqrt(sum u^2 sum v^2)
/// for weights in [0,1]. holds allows slack 1e-9 * n^2.
MixingCheck expander_mixing_check(const NdlCertificate &cert, const Graph &g,
                                  std::span<const double> u,
                                  std::span<const double> v);

/// Additive slack used when comparing a computed quantity against a bound.
inline double bound_slack(double bound) {
  return 1e-9 * (bound < 0 ? -bound : bound);
}

} // namespace oddcycle
