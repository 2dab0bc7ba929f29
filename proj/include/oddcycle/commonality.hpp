#pragma once

#include "oddcycle/counting.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/pattern.hpp"
#include "oddcycle/spectral.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace oddcycle {

/// Symmetric real function on X x X with zero diagonal and |value| <= 1,
/// stored densely in the sorted order of X. Houses gamma = 1_{E(Gamma[X])},
/// the colour class g, and f = 2g - gamma.
class EdgeFunction {
public:
  /// Indicator of the edges of g inside x.
  static EdgeFunction indicator(const Graph &g, const VertexSet &x);
  static EdgeFunction zero(const VertexSet &x);
  /// Validates symmetry, zero diagonal and |value| <= 1 (InputError).
  static EdgeFunction from_values(VertexSet x, Eigen::MatrixXd values);

  const VertexSet &domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }
  const Eigen::MatrixXd &values() const { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  bool is_indicator() const;

private:
  EdgeFunction(VertexSet x, Eigen::MatrixXd values)
      : domain_(std::move(x)), values_(std::move(values)) {}

  VertexSet domain_;
  Eigen::MatrixXd values_;
};

/// f = 2g - gamma. Requires equal domains and 0 <= g <= gamma, both {0,1}.
EdgeFunction signed_difference(const EdgeFunction &gamma, const EdgeFunction &g);

/// t_H(w) = E[prod_{ij in E(H)} w(x_i, x_j)] over independent uniform
/// vertices, for a cycle or path H and an arbitrary symmetric matrix w.
/// Throws DomainError for an empty matrix, InputError for figure-eights.
double homomorphism_density(const Pattern &h, const Eigen::MatrixXd &w);

double t_weighted(const Pattern &h, const EdgeFunction &fn);

/// E[<f1, f2>^J_H]: edges in J carry f1, the rest carry f2. Bit i of
/// `subset` selects edge i in the pattern's edge order (cycle edge i is
/// {i, i+1 mod m}, path edge i is {i, i+1}).
double subset_expectation(const Pattern &h, const Eigen::MatrixXd &f1,
                          const Eigen::MatrixXd &f2, std::uint64_t subset);

/// Q_H(z; f) = sum over even nonempty J of E[<f, gamma>^J] z^{e(H)-|J|},
/// evaluated as (t_H(z gamma + f) + t_H(z gamma - f))/2 - z^{e(H)} t_H(gamma).
/// Throws InputError unless |f| <= gamma pointwise.
double q_polynomial(const Pattern &h, const EdgeFunction &gamma,
                    const EdgeFunction &f, double z);

/// Same sum evaluated term by term, one transfer-matrix product per subset.
double q_polynomial_subsets(const Pattern &h, const EdgeFunction &gamma,
                            const EdgeFunction &f, double z);

inline constexpr std::size_t q_brute_max_edges = 7;
inline constexpr std::size_t q_brute_max_domain = 12;

/// Same sum with every expectation taken by enumerating vertex maps
/// X^{V(H)}. Limited to e(H) <= 7 and |X| <= 12 (ResourceError).
double q_polynomial_brute(const Pattern &h, const EdgeFunction &gamma,
                          const EdgeFunction &f, double z);

/// Coefficients c_0..c_{e(H)} of Q_H(z; f) in powers of z, recovered by
/// interpolating the closed form at e(H)+1 equally spaced points.
std::vector<double> q_coefficients(const Pattern &h, const EdgeFunction &gamma,
                                   const EdgeFunction &f);

double q_derivative_central(const Pattern &h, const EdgeFunction &gamma,
                            const EdgeFunction &f, double z, double step = 1e-4);

struct CancelIdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double max_abs_diff = 0.0;
};

/// t_H(g) + t_H(gamma - g) against
/// (1/2)^{e(H)-1} (t_H(gamma) + sum_{J even, nonempty} E[<f, gamma>^J]),
/// the right side summed subset by subset.
CancelIdentityCheck cancel_identity_check(const Pattern &h,
                                          const EdgeFunction &gamma,
                                          const EdgeFunction &g);

struct DerivativeCheck {
  double derivative = 0.0;        // central difference
  std::optional<double> derivative_interpolated; // exact-coefficient route, 2k+1 <= 5
  double path_term = 0.0;         // p (2k+1) Q_{P_2k}(z; f)
  double residual = 0.0;          // |derivative - path_term|
  double bound = 0.0;
  bool holds = false;
  double summed_bound = 0.0; // bound * (2^{2k-1} - 1)
  bool holds_summed = false;
};

/// |d/dz Q_{C_{2k+1}}(z;f) - p(2k+1) Q_{P_{2k}}(z;f)| against
/// B = (2k+1) p^{2k+1} (lambda/(mu^{2k+1} d) + lambda^{2k-1} n/(mu^{2k+1} d^{2k}))
/// with mu = |X|/n, and against B |E_+(P_2k)|, which is what summing the
/// per-subset estimate over all subsets yields. The two agree for k = 1.
/// Tolerance 1e-6 is added to both.
DerivativeCheck derivative_residual_check(const NdlCertificate &cert,
                                          const EdgeFunction &gamma,
                                          const EdgeFunction &f, unsigned k,
                                          double z);

inline constexpr unsigned t_sequence_max_edges = 12;

/// T_0..T_{2k}: T_0 = T_1 = 0 and, for m >= 2,
///   T_m = (p z)^{2k-m} sum_J E[<f, z gamma>^J_{P_m}]
/// over even J containing the first and last edge of the m-edge path.
std::vector<double> t_sequence(unsigned k, const EdgeFunction &gamma,
                               const EdgeFunction &f, double z, double p);

/// T_{2l} + 2 T_{2l-1} + T_{2l-2}.
double t_combination(const std::vector<double> &t, unsigned ell);

struct PathSumCheck {
  double value = 0.0; // sum_{J in E_+(P_2k)} E[<f, z gamma>^J] = Q_{P_2k}(z; f)
  double bound = 0.0; // -p^{2k} 2^{5k} delta
  bool holds = false;
};

/// Lower bound on the even-subset path sum over a delta-almost-regular X.
PathSumCheck path_sum_check(const EdgeFunction &gamma, const EdgeFunction &f,
                            unsigned k, double z, double p, double delta);

struct CoverCount {
  std::uint64_t subset = 0;
  unsigned size = 0;
  unsigned times_covered = 0;
  unsigned expected = 0; // 2k+1-|J|
};

/// For every even nonempty J of E(C_{2k+1}), how many of the families
/// E_+(C_{2k+1} - e) contain it, by exhaustive enumeration.
std::vector<CoverCount> derivative_cover_counts(unsigned k);

/// max_x |deg_{Gamma[X]}(x) / (p |X|) - 1|; 0 for empty X.
double measured_delta(const Graph &host, const VertexSet &x, double p);

/// (1/2^{2k}) (p|X|)^{2k+1} (1 - 2^{8k} delta). Requires delta in [0,1) and
/// |X| >= 1 (DomainError).
double theorem31_bound(const NdlCertificate &cert, const VertexSet &x,
                       double delta, unsigned k);

struct CommonalityReport {
  unsigned k = 1;
  std::size_t x_size = 0;
  double p = 0.0;
  double delta = 0.0;
  Count injective_g;
  Count injective_complement;
  double bound = 0.0;
  bool holds = false;
  bool vacuous = false; // bound <= 0, nothing is being claimed
  std::optional<double> hypothesis_ratio;
  // Smallest c with N_G + N_comp >= 2^{-2k} (p|X|)^{2k+1} (1 - c delta);
  // absent when delta = 0.
  std::optional<double> critical_constant;

  const char *status() const {
    return vacuous ? "vacuous" : (holds ? "holds" : "violated");
  }
};

/// Counts labelled C_{2k+1} copies in G_sub[X] and in Gamma[X] - G_sub and
/// compares their sum with theorem31_bound at the measured delta. G_sub is
/// given on the host's vertex labels and must lie inside host[X]
/// (ContainmentError otherwise).
CommonalityReport verify_commonality(const Graph &host, const NdlCertificate &cert,
                                     const VertexSet &x, const Graph &g_sub,
                                     unsigned k);

} // namespace oddcycle
