// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oddcycle/commonality.hpp"
#include "oddcycle/constructions.hpp"
#include "oddcycle/counting.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/experiment.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/pattern.hpp"
#include "oddcycle/random.hpp"
#include "oddcycle/regularize.hpp"
#include "oddcycle/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace oddcycle;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char *name;
  double budget_seconds;
  std::function<Outcome()> body;
};

template <class... Args> std::string fmt(const char *f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<NamedGraph> certified_corpus() {
  std::vector<NamedGraph> out;
  for (auto &ng : builtin_corpus()) {
    if (degree_profile(ng.graph).regular_degree && ng.graph.vertex_count() > 0) {
      out.push_back(ng);
    }
  }
  return out;
}

VertexSet random_subset(std::size_t n, std::size_t max_size, Rng &rng) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  rng.shuffle(all);
  const std::size_t size = 1 + rng.below(std::min(n, max_size));
  all.resize(size);
  return VertexSet(n, all);
}

// Subgraph of host[x] keeping each edge with probability keep.
Graph random_inside(const Graph &host, const VertexSet &x, double keep, Rng &rng) {
  std::vector<Edge> kept;
  for (auto [u, v] : host.edges()) {
    if (x.contains(u) && x.contains(v) && rng.bernoulli(keep)) kept.push_back({u, v});
  }
  return Graph::from_edge_list(host.vertex_count(), kept);
}

// Labelled triangles as tr(A^3), computed by dense matrix products.
double trace_cubed(const Graph &g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return (a * a * a).trace();
}

// ------------------------------------------------------------------ criteria

Outcome oracle_equivalence() {
  std::vector<Pattern> patterns;
  for (unsigned m = 2; m <= 7; ++m) patterns.push_back(Pattern::cycle(m));
  for (unsigned m = 0; m <= 6; ++m) patterns.push_back(Pattern::path(m));
  patterns.push_back(Pattern::figure_eight(1, 1));
  std::size_t pairs = 0, mismatches = 0;
  for (const auto &ng : builtin_corpus()) {
    if (ng.graph.vertex_count() > 10) continue;
    for (const auto &h : patterns) {
      ++pairs;
      if (Count(brute_hom_count(h.graph(), ng.graph)) != hom_count(h, ng.graph)) ++mismatches;
    }
  }
  return {pairs > 0 && mismatches == 0, fmt("%zu graph-pattern pairs, %zu mismatches", pairs, mismatches)};
}

std::vector<Graph> small_hosts() {
  std::vector<Graph> hosts;
  for (std::size_t n = 4; n <= 8; ++n) hosts.push_back(complete_graph(n));
  hosts.push_back(paley(5));
  hosts.push_back(paley(13));
  hosts.push_back(random_regular(10, 3, 1));
  return hosts;
}

Outcome cancel_identity() {
  Rng rng(101);
  const auto hosts = small_hosts();
  double worst = 0.0;
  std::size_t triples = 0;
  for (; triples < 600; ++triples) {
    const auto &host = hosts[rng.below(hosts.size())];
    const auto x = random_subset(host.vertex_count(), host.vertex_count(), rng);
    const auto g = random_inside(host, x, rng.unit(), rng);
    const auto gamma = EdgeFunction::indicator(host, x);
    const auto gx = EdgeFunction::indicator(g, x);
    for (unsigned m : {3u, 5u}) {
      worst = std::max(worst, cancel_identity_check(Pattern::cycle(m), gamma, gx).max_abs_diff);
    }
  }
  return {worst <= 1e-12, fmt("%zu triples x {C3, C5}, max |lhs - rhs| = %.3g", triples, worst)};
}

Outcome q_closed_form() {
  Rng rng(102);
  const auto hosts = small_hosts();
  std::vector<Pattern> patterns;
  for (unsigned m = 2; m <= 7; ++m) patterns.push_back(Pattern::cycle(m));
  for (unsigned m = 1; m <= 7; ++m) patterns.push_back(Pattern::path(m));
  double worst = 0.0;
  std::size_t instances = 0;
  for (; instances < 240; ++instances) {
    const auto &h = patterns[instances % patterns.size()];
    const auto &host = hosts[rng.below(hosts.size())];
    // Keep |X|^{|V(H)|} near 10^5 so enumeration stays fast.
    const auto cap = static_cast<std::size_t>(
        std::floor(std::pow(1e5, 1.0 / static_cast<double>(h.vertex_count()))));
    const auto x = random_subset(host.vertex_count(), std::clamp<std::size_t>(cap, 2, 12), rng);
    const auto gamma = EdgeFunction::indicator(host, x);
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(gamma.values().rows(), gamma.values().cols());
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < f.cols(); ++j) {
        if (gamma(i, j) != 0.0) f(i, j) = f(j, i) = 2.0 * rng.unit() - 1.0;
      }
    }
    const auto fn = EdgeFunction::from_values(x, f);
    const double z = rng.unit();
    worst = std::max(worst, std::abs(q_polynomial(h, gamma, fn, z) -
                                     q_polynomial_brute(h, gamma, fn, z)));
  }
  return {worst <= 1e-12, fmt("%zu instances with e(H) <= 7, max |closed - enumerated| = %.3g",
                              instances, worst)};
}

Outcome even_trace_bound() {
  std::size_t checks = 0, violations = 0;
  for (const auto &ng : certified_corpus()) {
    const auto cert = certify_ndl(ng.graph);
    for (unsigned k = 1; k <= 4; ++k) {
      ++checks;
      const double bound = even_cycle_trace_bound(cert, k);
      if (to_double(hom_count_cycle(ng.graph, 2 * k)) > bound + bound_slack(bound)) ++violations;
    }
  }
  return {checks > 0 && violations == 0, fmt("%zu (graph, k) checks, %zu violations", checks, violations)};
}

Outcome odd_trace_deviation() {
  std::size_t checks = 0, violations = 0;
  for (const auto &ng : certified_corpus()) {
    const auto cert = certify_ndl(ng.graph);
    const double d = static_cast<double>(cert.d);
    for (unsigned k = 1; k <= 3; ++k) {
      ++checks;
      const double odd = to_double(hom_count_cycle(ng.graph, 2 * k + 1));
      const double rhs = cert.lambda * to_double(hom_count_cycle(ng.graph, 2 * k));
      if (std::abs(odd - std::pow(d, 2.0 * k + 1)) > rhs + bound_slack(rhs) + 1e-9) ++violations;
    }
  }
  return {checks > 0 && violations == 0, fmt("%zu (graph, k) checks, %zu violations", checks, violations)};
}

Outcome expander_mixing() {
  Rng rng(106);
  std::size_t checks = 0, violations = 0, lhs_mismatch = 0;
  for (const auto &ng : certified_corpus()) {
    const auto &g = ng.graph;
    const auto cert = certify_ndl(g);
    const auto n = g.vertex_count();
    std::vector<double> u(n), v(n);
    for (int trial = 0; trial < 1000; ++trial) {
      const bool binary = trial % 2 == 0;
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = binary ? static_cast<double>(rng.bernoulli(0.5)) : rng.unit();
        v[i] = binary ? static_cast<double>(rng.bernoulli(0.5)) : rng.unit();
      }
      const auto check = expander_mixing_check(cert, g, u, v);
      double uav = 0.0, su = 0.0, sv = 0.0;
      for (auto [a, b] : g.edges()) uav += u[a] * v[b] + u[b] * v[a];
      for (std::size_t i = 0; i < n; ++i) {
        su += u[i];
        sv += v[i];
      }
      const double lhs = std::abs(uav - static_cast<double>(cert.d) / static_cast<double>(n) * su * sv);
      ++checks;
      if (std::abs(lhs - check.lhs) > 1e-9 * static_cast<double>(n * n)) ++lhs_mismatch;
      if (!check.holds || lhs > check.rhs + 1e-9 * static_cast<double>(n * n)) ++violations;
    }
  }
  return {checks > 0 && violations == 0 && lhs_mismatch == 0,
          fmt("%zu weight pairs, %zu violations, %zu lhs mismatches", checks, violations, lhs_mismatch)};
}

Outcome commonality_paley101() {
  const auto host = paley(101);
  const auto cert = certify_ndl(host);
  const double ratio = hypothesis_ratio(cert, 1);
  const double reference = std::pow(static_cast<double>(cert.d), 3.0) / 4.0;
  const double floor = 0.5 * reference;
  double sum = 0.0, lowest = INFINITY;
  std::size_t below = 0, count_mismatch = 0;
  const std::size_t trials = 100;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto g = random_edge_subgraph(host, 0.5, Rng::derive(7, i));
    const auto rest = complement_within(host, g);
    const double total = to_double(injective_count_cycle(g, 3) + injective_count_cycle(rest, 3));
    // Every closed 3-walk in a simple graph is a labelled triangle.
    if (std::abs(total - (trace_cubed(g) + trace_cubed(rest))) > 0.5) ++count_mismatch;
    sum += total;
    lowest = std::min(lowest, total);
    below += total < floor;
  }
  const double mean = sum / static_cast<double>(trials);
  const double rel = std::abs(mean - reference) / reference;
  const bool pass = cert.d == 50 && std::abs(ratio - 0.223) < 1e-3 && below == 0 &&
                    count_mismatch == 0 && rel <= 0.15;
  return {pass, fmt("ratio %.4f, min %.0f (floor %.0f), mean %.1f vs %.0f (%.1f%% off), "
                    "%zu count mismatches",
                    ratio, lowest, floor, mean, reference, 100.0 * rel, count_mismatch)};
}

Outcome bipartite_probe() {
  const auto host = paley(101);
  const double floor = 0.5 * std::pow(50.0, 3.0) / 4.0;
  std::size_t failures = 0;
  double lowest = INFINITY;
  for (std::size_t i = 0; i < 50; ++i) {
    const auto cut = random_bipartite_cut(host, Rng::derive(8, i));
    const auto rest = complement_within(host, cut);
    const bool cut_free = injective_count_cycle(cut, 3) == 0 && trace_cubed(cut) == 0.0;
    const double comp = to_double(injective_count_cycle(rest, 3));
    lowest = std::min(lowest, comp);
    failures += !(cut_free && comp >= floor);
  }
  return {failures == 0, fmt("50 cuts, %zu failures, min complement count %.0f (floor %.0f)",
                             failures, lowest, floor)};
}

Outcome turan_paley101() {
  const auto host = paley(101);
  const auto m = static_cast<std::size_t>(std::ceil(0.55 * static_cast<double>(host.edge_count())));
  std::size_t found = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const auto g = random_edge_sample(host, m, Rng::derive(9, i));
    const auto c = find_cycle(g, 3);
    if (c && g.edge_count() >= m && g.adjacent((*c)[0], (*c)[1]) && g.adjacent((*c)[1], (*c)[2]) &&
        g.adjacent((*c)[2], (*c)[0])) {
      ++found;
    }
  }
  return {found == 100, fmt("%zu of 100 samples with %zu edges contain a verified triangle", found, m)};
}

Outcome t_combination_sign() {
  Rng rng(110);
  const auto host = paley(13);
  const auto x = VertexSet::all(13);
  const auto gamma = EdgeFunction::indicator(host, x);
  const double p = 6.0 / 13.0;
  double worst = INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = EdgeFunction::indicator(random_inside(host, x, rng.unit(), rng), x);
    const auto f = signed_difference(gamma, g);
    const double z = 0.01 + 0.99 * rng.unit();
    const auto t = t_sequence(2, gamma, f, z, p);
    for (unsigned ell : {1u, 2u}) worst = std::min(worst, t_combination(t, ell));
  }
  return {worst >= -1e-9, fmt("100 trials, l in {1, 2}, min combination %.3g", worst)};
}

Outcome cover_counts() {
  std::size_t subsets = 0, wrong = 0;
  bool sizes_ok = true;
  for (unsigned k : {1u, 2u}) {
    const auto covers = derivative_cover_counts(k);
    sizes_ok = sizes_ok && covers.size() == (std::size_t{1} << (2 * k)) - 1;
    for (const auto &c : covers) {
      ++subsets;
      const auto size = static_cast<unsigned>(__builtin_popcountll(c.subset));
      wrong += !(size == c.size && size % 2 == 0 && c.times_covered == 2 * k + 1 - size &&
                 c.expected == 2 * k + 1 - size);
    }
  }
  return {sizes_ok && wrong == 0, fmt("%zu even subsets over C3 and C5, %zu miscounted", subsets, wrong)};
}

struct Recheck {
  bool size_ok, g_ok, gamma_ok;
  double gamma_delta;
};

Recheck recheck(const Graph &host, const Graph &g, const VertexSet &x, const RegularizationParams &params) {
  const auto n = static_cast<long double>(host.vertex_count());
  const auto d = static_cast<long double>(host.degree(0));
  const auto s = static_cast<long double>(x.size());
  Recheck r{64.0L * s * s >= static_cast<long double>(params.epsilon) * n * n, true, true, 0.0};
  const long double lo_g = static_cast<long double>(params.alpha) - params.epsilon;
  for (Vertex v : x.members()) {
    long double dg = 0, dh = 0;
    for (Vertex u : g.neighbors(v)) dg += x.contains(u);
    for (Vertex u : host.neighbors(v)) dh += x.contains(u);
    // deg >= c p |X| is deg n >= c d |X|.
    if (dg * n < lo_g * d * s) r.g_ok = false;
    if (dh * n < (1.0L - params.epsilon) * d * s || dh * n > (1.0L + params.epsilon) * d * s) {
      r.gamma_ok = false;
    }
    r.gamma_delta = std::max(r.gamma_delta, static_cast<double>(std::abs(dh * n / (d * s) - 1.0L)));
  }
  return r;
}

Outcome regularization_soundness() {
  Rng rng(112);
  const std::vector<Graph> hosts = {paley(29), paley(37), paley(41), random_regular(30, 3, 2),
                                    random_regular(40, 4, 3), random_regular(60, 3, 3)};
  std::size_t checked = 0, attempts = 0, extraction = 0, mismatches = 0;
  while (checked < 50 && attempts < 1000) {
    ++attempts;
    const auto &host = hosts[rng.below(hosts.size())];
    const double alpha = 0.3 + 0.7 * rng.unit();
    const RegularizationParams params{alpha, alpha * (0.05 + 0.9 * rng.unit()), 0.05 + rng.unit(), 1e-3};
    const auto m = static_cast<std::size_t>(
        std::ceil(std::min(1.0, alpha + 0.2 * rng.unit()) * static_cast<double>(host.edge_count())));
    const auto g = random_edge_sample(host, m, rng.next());
    try {
      const auto r = regularize(host, g, params);
      ++checked;
      const auto c = recheck(host, g, r.x, params);
      std::size_t deleted = 0;
      for (const auto &round : r.trace) deleted += round.vertices.size();
      const bool same = c.size_ok == r.checks.size_ok && c.g_ok == r.checks.min_g_degree_ok &&
                        c.gamma_ok == r.checks.gamma_degree_ok &&
                        std::abs(c.gamma_delta - r.checks.gamma_delta) <= 1e-12 &&
                        r.x.size() + deleted == r.core.size() &&
                        r.core.size() + r.peeled.size() == host.vertex_count();
      mismatches += !same;
    } catch (const ExtractionError &) {
      ++extraction;
    }
  }
  std::size_t trivial_bad = 0;
  for (const auto &host : {paley(13), paley(101), complete_graph(7), random_regular(30, 3, 2)}) {
    const auto r = regularize(host, host, RegularizationParams{1.0, 0.5, 1.0, 1e-3});
    trivial_bad += !(r.x == VertexSet::all(host.vertex_count()) && r.checks.gamma_delta == 0.0 &&
                     r.checks.all() && r.trace.size() == 2 && r.trace[0].vertices.empty() &&
                     r.trace[1].vertices.empty());
  }
  return {checked == 50 && mismatches == 0 && trivial_bad == 0,
          fmt("%zu instances rechecked (%zu extraction failures skipped), %zu mismatches, "
              "%zu bad fixpoints",
              checked, extraction, mismatches, trivial_bad)};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle-equivalence", 60, oracle_equivalence},
      {2, "cancellation-identity", 120, cancel_identity},
      {3, "q-closed-form", 60, q_closed_form},
      {4, "even-closed-walk-bound", 60, even_trace_bound},
      {5, "odd-closed-walk-deviation", 60, odd_trace_deviation},
      {6, "expander-mixing", 120, expander_mixing},
      {7, "commonality-paley101", 600, commonality_paley101},
      {8, "bipartite-probe", 300, bipartite_probe},
      {9, "triangle-search-paley101", 120, turan_paley101},
      {10, "t-combination-sign", 60, t_combination_sign},
      {11, "derivative-cover-counts", 10, cover_counts},
      {12, "regularization-soundness", 300, regularization_soundness},
  };
  int failed = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception &e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s  %2d %-28s %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
