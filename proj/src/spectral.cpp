#include "oddcycle/spectral.hpp"

#include "oddcycle/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace oddcycle {

double Spectrum::power_sum(unsigned k) const {
  double s = 0.0;
  for (double l : eigenvalues) {
    s += std::pow(l, static_cast<double>(k));
  }
  return s;
}

Spectrum spectrum(const Graph &g) {
  const auto n = g.vertex_count();
  if (n == 0) {
    throw InputError("spectrum: graph has no vertices");
  }
  if (n > max_dense_vertices) {
    throw InputError("spectrum: n = " + std::to_string(n) +
                     " exceeds the dense limit " +
                     std::to_string(max_dense_vertices));
  }
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError("spectrum: eigensolver did not converge");
  }
  const Eigen::MatrixXd &vectors = solver.eigenvectors();
  const Eigen::VectorXd &values = solver.eigenvalues();
  const Eigen::MatrixXd residuals = a * vectors - vectors * values.asDiagonal();

  Spectrum s;
  s.residual = n == 0 ? 0.0 : residuals.cwiseAbs().maxCoeff();
  const double tolerance = 1e-9 * static_cast<double>(n);
  if (!(s.residual <= tolerance)) {
    throw NumericError("spectrum: residual " + std::to_string(s.residual) +
                       " exceeds " + std::to_string(tolerance));
  }
  // Eigen returns ascending order.
  s.eigenvalues.assign(values.data(), values.data() + values.size());
  std::reverse(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

NdlCertificate certify_ndl(const Graph &g) {
  const auto profile = degree_profile(g);
  if (!profile.regular_degree) {
    throw CertificationError("certify: graph is not regular (degrees " +
                             std::to_string(profile.min_degree) + ".." +
                             std::to_string(profile.max_degree) + ")");
  }
  NdlCertificate cert;
  cert.n = g.vertex_count();
  cert.d = *profile.regular_degree;
  cert.p = static_cast<double>(cert.d) / static_cast<double>(cert.n);
  cert.spectrum = spectrum(g);

  const auto &ev = cert.spectrum.eigenvalues;
  const double d = static_cast<double>(cert.d);
  const double tolerance = 1e-9 * static_cast<double>(cert.n);
  if (std::abs(ev.front() - d) > tolerance) {
    throw NumericError("certify: top eigenvalue " + std::to_string(ev.front()) +
                       " differs from the degree " + std::to_string(cert.d));
  }
  if (ev.size() >= 2) {
    cert.lambda = std::max(std::abs(ev[1]), std::abs(ev.back()));
  }
  // |l_n| of a bipartite graph can land a rounding error above d.
  cert.lambda = std::min(cert.lambda, d);
  return cert;
}

double hypothesis_ratio(const NdlCertificate &cert, unsigned k) {
  if (k == 0) {
    throw DomainError("hypothesis_ratio: k must be at least 1");
  }
  if (cert.d == 0) {
    throw DomainError("hypothesis_ratio: d = 0");
  }
  const double d = static_cast<double>(cert.d);
  return std::pow(cert.lambda, 2.0 * k - 1) * static_cast<double>(cert.n) /
         std::pow(d, 2.0 * k);
}

double even_cycle_trace_bound(const NdlCertificate &cert, unsigned k) {
  if (k == 0) {
    throw DomainError("even_cycle_trace_bound: k must be at least 1");
  }
  const double d = static_cast<double>(cert.d);
  const double lambda_factor = k == 1 ? 1.0 : std::pow(cert.lambda, 2.0 * k - 2);
  return std::pow(d, 2.0 * k) + lambda_factor * d * static_cast<double>(cert.n);
}

MixingCheck expander_mixing_check(const NdlCertificate &cert, const Graph &g,
                                  std::span<const double> u,
                                  std::span<const double> v) {
  const auto n = g.vertex_count();
  if (n != cert.n) {
    throw InputError("mixing check: graph and certificate sizes differ");
  }
  const auto profile = degree_profile(g);
  if (!profile.regular_degree || *profile.regular_degree != cert.d) {
    throw InputError("mixing check: graph is not d-regular for the certificate");
  }
  if (u.size() != n || v.size() != n) {
    throw InputError("mixing check: weight vectors must have length n");
  }
  auto check_range = [](std::span<const double> w) {
    for (double x : w) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw InputError("mixing check: weight " + std::to_string(x) +
                         " outside [0,1]");
      }
    }
  };
  check_range(u);
  check_range(v);

  double bilinear = 0.0;
  for (auto [a, b] : g.edges()) {
    bilinear += u[a] * v[b] + u[b] * v[a];
  }
  double su = 0.0, sv = 0.0, su2 = 0.0, sv2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    su += u[i];
    sv += v[i];
    su2 += u[i] * u[i];
    sv2 += v[i] * v[i];
  }
  MixingCheck out;
  out.lhs = std::abs(bilinear - cert.p * su * sv);
  out.rhs = cert.lambda * std::sqrt(su2 * sv2);
  const double nn = static_cast<double>(n);
  out.holds = out.lhs <= out.rhs + 1e-9 * nn * nn;
  return out;
}

} // namespace oddcycle
