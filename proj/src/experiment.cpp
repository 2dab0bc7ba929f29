#include "oddcycle/experiment.hpp"

#include "oddcycle/commonality.hpp"
#include "oddcycle/constructions.hpp"
#include "oddcycle/counting.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/pattern.hpp"
#include "oddcycle/regularize.hpp"
#include "oddcycle/spectral.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <span>
#include <sstream>

namespace oddcycle {

namespace {

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string &key, const std::string &text) {
  double v = 0.0;
  const auto *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("config: '" + key + "' expects a number, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_unsigned(const std::string &key, const std::string &text) {
  std::uint64_t v = 0;
  const auto *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw InputError("config: '" + key + "' expects a nonnegative integer, got '" +
                     text + "'");
  }
  return v;
}

bool parse_bool(const std::string &key, const std::string &text) {
  if (text == "true" || text == "1") {
    return true;
  }
  if (text == "false" || text == "0") {
    return false;
  }
  throw InputError("config: '" + key + "' expects true or false, got '" + text + "'");
}

std::vector<std::uint64_t> parse_list(const std::string &spec, const std::string &args) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(args);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_unsigned(spec, trim(item)));
  }
  return out;
}

Json count_json(const Count &c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) {
    return c.convert_to<std::uint64_t>();
  }
  return c.str();
}

[[noreturn]] void rethrow_indexed(std::size_t index) {
  const std::string prefix = "trial " + std::to_string(index) + ": ";
  try {
    throw;
  } catch (const InputError &e) {
    throw InputError(prefix + e.what());
  } catch (const ContainmentError &e) {
    throw ContainmentError(prefix + e.what());
  } catch (const CertificationError &e) {
    throw CertificationError(prefix + e.what());
  } catch (const NumericError &e) {
    throw NumericError(prefix + e.what());
  } catch (const ResourceError &e) {
    throw ResourceError(prefix + e.what());
  } catch (const DomainError &e) {
    throw DomainError(prefix + e.what());
  } catch (const GenerationError &e) {
    throw GenerationError(prefix + e.what());
  } catch (const ExtractionError &e) {
    throw ExtractionError(prefix + e.what());
  } catch (const PreconditionError &e) {
    throw PreconditionError(prefix + e.what());
  } catch (const Error &e) {
    throw Error(prefix + e.what());
  }
}

void run_trials(Report &report, std::size_t count,
                const std::function<void(TrialRecord &)> &body) {
  for (std::size_t i = 0; i < count; ++i) {
    TrialRecord t;
    t.index = i;
    t.seed = Rng::derive(report.config.seed, i);
    try {
      body(t);
    } catch (const Error &) {
      rethrow_indexed(i);
    }
    report.trials.push_back(std::move(t));
  }
}

void aggregate(Report &report) {
  report.pass = std::all_of(report.trials.begin(), report.trials.end(),
                            [](const TrialRecord &t) { return t.vacuous || t.pass; });
}

Graph load_sub(const std::string &path, const Graph &host) {
  Graph g = read_edge_list_file(path);
  if (g.vertex_count() != host.vertex_count()) {
    throw InputError("subgraph '" + path + "' has " + std::to_string(g.vertex_count()) +
                     " vertices, host has " + std::to_string(host.vertex_count()));
  }
  return g;
}

Graph restrict_edges(const Graph &g, const VertexSet &x) {
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    if (x.contains(u) && x.contains(v)) {
      kept.push_back({u, v});
    }
  }
  return Graph::from_edge_list(g.vertex_count(), kept);
}

Json vertices_json(std::span<const Vertex> v) { return Json(std::vector<Vertex>(v.begin(), v.end())); }

Json certificate_json(const NdlCertificate &cert) {
  Json ratios = Json::array();
  for (unsigned k = 1; k <= 4; ++k) {
    if (cert.d == 0) {
      ratios.push_back(nullptr);
    } else {
      ratios.push_back(hypothesis_ratio(cert, k));
    }
  }
  return Json{{"n", cert.n},
              {"d", cert.d},
              {"lambda", cert.lambda},
              {"p", cert.p},
              {"hypothesis_ratio", ratios}};
}

// ---------------------------------------------------------------- campaigns

void campaign_gen(Report &r) {
  const auto &c = r.config;
  Graph g = resolve_graph(c.generator, c.seed);
  const auto profile = degree_profile(g);
  r.result = Json{{"generator", c.generator},
                  {"n", g.vertex_count()},
                  {"m", g.edge_count()},
                  {"regular_degree", profile.regular_degree
                                         ? Json(*profile.regular_degree)
                                         : Json(nullptr)}};
  r.graph = std::move(g);
  r.pass = true;
}

void campaign_certify(Report &r) {
  const Graph host = resolve_graph(r.config.host, r.config.seed);
  r.result = certificate_json(certify_ndl(host));
  r.pass = true;
}

void campaign_count(Report &r) {
  const auto &c = r.config;
  const Graph host = resolve_graph(c.host, c.seed);
  const auto rep = count_report(c.host, host, Pattern::parse(c.pattern), c.injective);
  r.result = Json{{"graph_id", rep.graph_id},
                  {"pattern", rep.pattern.name()},
                  {"hom", count_json(rep.hom)},
                  {"injective", rep.injective ? count_json(*rep.injective) : Json(nullptr)},
                  {"density", rep.density}};
  r.pass = true;
}

void campaign_commonality(Report &r) {
  const auto &c = r.config;
  const Graph host = resolve_graph(c.host, c.seed);
  const auto cert = certify_ndl(host);
  const VertexSet x = c.subset.empty() ? VertexSet::all(host.vertex_count())
                                       : read_vertex_set_file(c.subset, host.vertex_count());
  const std::size_t count = c.sub.empty() ? c.trials : 1;
  std::optional<Graph> fixed;
  if (!c.sub.empty()) {
    fixed = load_sub(c.sub, host);
  }

  double sum_total = 0.0;
  double min_total = std::numeric_limits<double>::infinity();
  run_trials(r, count, [&](TrialRecord &t) {
    const Graph g = fixed ? *fixed
                          : restrict_edges(random_edge_subgraph(host, c.keep, t.seed), x);
    const auto rep = verify_commonality(host, cert, x, g, c.k);
    const double total = to_double(rep.injective_g + rep.injective_complement);
    const double threshold = c.margin * rep.bound;
    t.vacuous = rep.vacuous;
    t.pass = rep.vacuous || total >= threshold - bound_slack(threshold);
    t.data = Json{{"edges", g.edge_count()},
                  {"x_size", rep.x_size},
                  {"delta", rep.delta},
                  {"injective_g", count_json(rep.injective_g)},
                  {"injective_complement", count_json(rep.injective_complement)},
                  {"total", total},
                  {"bound", rep.bound},
                  {"threshold", threshold},
                  {"status", rep.vacuous ? "vacuous" : (t.pass ? "holds" : "violated")},
                  {"hypothesis_ratio", rep.hypothesis_ratio ? Json(*rep.hypothesis_ratio)
                                                            : Json(nullptr)},
                  {"critical_constant", rep.critical_constant
                                            ? Json(*rep.critical_constant)
                                            : Json(nullptr)}};
    sum_total += total;
    min_total = std::min(min_total, total);
  });

  const double px = cert.p * static_cast<double>(x.size());
  const double reference = std::pow(px, 2.0 * c.k + 1.0) / std::pow(4.0, c.k);
  const double mean = sum_total / static_cast<double>(count);
  r.result = Json{{"certificate", certificate_json(cert)},
                  {"x_size", x.size()},
                  {"reference", reference},
                  {"mean_total", mean},
                  {"min_total", min_total},
                  {"mean_relative_deviation", std::abs(mean / reference - 1.0)}};
  aggregate(r);
}

void campaign_turan(Report &r) {
  const auto &c = r.config;
  const Graph host = resolve_graph(c.host, c.seed);
  const double density = 0.5 + c.delta;
  if (density > 1.0) {
    throw InputError("verify-turan: 1/2 + delta exceeds 1");
  }
  const auto target = static_cast<std::size_t>(
      std::ceil(density * static_cast<double>(host.edge_count())));
  const unsigned m = 2 * c.k + 1;
  run_trials(r, c.trials, [&](TrialRecord &t) {
    const Graph g = random_edge_sample(host, target, t.seed);
    const auto cycle = find_cycle(g, m);
    t.pass = cycle.has_value();
    t.data = Json{{"edges", g.edge_count()},
                  {"fraction", static_cast<double>(g.edge_count()) /
                                   static_cast<double>(host.edge_count())},
                  {"cycle", cycle ? vertices_json(*cycle) : Json(nullptr)}};
  });
  r.result = Json{{"host_edges", host.edge_count()},
                  {"sampled_edges", target},
                  {"cycle_length", m}};
  aggregate(r);
}

void campaign_probe(Report &r) {
  const auto &c = r.config;
  const Graph host = resolve_graph(c.host, c.seed);
  const auto cert = certify_ndl(host);
  const auto all = VertexSet::all(host.vertex_count());
  const double delta = measured_delta(host, all, cert.p);
  const double bound = theorem31_bound(cert, all, delta, c.k);
  const double threshold = c.margin * bound;
  const unsigned m = 2 * c.k + 1;
  double sum_fraction = 0.0;
  run_trials(r, c.trials, [&](TrialRecord &t) {
    const Graph cut = random_bipartite_cut(host, t.seed);
    const Graph comp = complement_within(host, cut);
    const Count in_cut = injective_count_cycle(cut, m);
    const Count in_comp = injective_count_cycle(comp, m);
    const double fraction =
        host.edge_count() == 0 ? 0.0
                               : static_cast<double>(cut.edge_count()) /
                                     static_cast<double>(host.edge_count());
    t.pass = in_cut == 0 &&
             (bound <= 0.0 || to_double(in_comp) >= threshold - bound_slack(threshold));
    t.data = Json{{"cut_edges", cut.edge_count()},
                  {"cut_fraction", fraction},
                  {"injective_cut", count_json(in_cut)},
                  {"injective_complement", count_json(in_comp)},
                  {"bound", bound},
                  {"threshold", threshold}};
    sum_fraction += fraction;
  });
  r.result = Json{{"certificate", certificate_json(cert)},
                  {"delta", delta},
                  {"bound", bound},
                  {"mean_cut_fraction", sum_fraction / static_cast<double>(c.trials)}};
  aggregate(r);
}

Json regularization_json(const RegularizationResult &res) {
  Json trace = Json::array();
  for (const auto &round : res.trace) {
    trace.push_back(Json{{"label", round.label}, {"vertices", vertices_json(round.vertices)}});
  }
  auto opt = [](const std::optional<bool> &b) { return b ? Json(*b) : Json(nullptr); };
  return Json{
      {"x", vertices_json(res.x.members())},
      {"x_size", res.x.size()},
      {"core_size", res.core.size()},
      {"peeled", vertices_json(res.peeled)},
      {"trace", trace},
      {"round_sizes", res.round_sizes},
      {"claim_bounds", res.claim_bounds},
      {"outside_claim_regime", res.outside_claim_regime},
      {"checks",
       Json{{"size_ok", res.checks.size_ok},
            {"min_g_degree_ok", res.checks.min_g_degree_ok},
            {"gamma_degree_ok", res.checks.gamma_degree_ok},
            {"size_required", res.checks.size_required},
            {"g_degree_margin", res.checks.g_degree_margin},
            {"gamma_delta", res.checks.gamma_delta}}},
      {"eta",
       Json{{"claim_regime", res.eta.claim_regime},
            {"size_regime", opt(res.eta.size_regime)},
            {"max_degree_regime", opt(res.eta.max_degree_regime)}}}};
}

void campaign_regularize(Report &r) {
  const auto &c = r.config;
  const Graph host = resolve_graph(c.host, c.seed);
  RegularizationParams params{c.alpha, c.epsilon, c.rho, c.eta};
  params.validate();
  const std::size_t count = c.sub.empty() ? c.trials : 1;
  std::optional<Graph> fixed;
  if (!c.sub.empty()) {
    fixed = load_sub(c.sub, host);
  }
  const auto target = static_cast<std::size_t>(
      std::ceil(c.alpha * static_cast<double>(host.edge_count())));
  run_trials(r, count, [&](TrialRecord &t) {
    const Graph g = fixed ? *fixed : random_edge_sample(host, target, t.seed);
    const auto res = regularize(host, g, params);
    t.pass = res.checks.all();
    t.data = regularization_json(res);
  });
  r.result = Json{{"epsilon1", params.epsilon1()}, {"iteration_cap", params.iteration_cap()}};
  aggregate(r);
}

EdgeFunction random_colour(const Graph &host, const VertexSet &x, Rng &rng) {
  std::vector<Edge> kept;
  for (auto [u, v] : host.edges()) {
    if (x.contains(u) && x.contains(v) && rng.bernoulli(0.5)) {
      kept.push_back({u, v});
    }
  }
  return EdgeFunction::indicator(Graph::from_edge_list(host.vertex_count(), kept), x);
}

VertexSet random_subset(std::size_t n, Rng &rng) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (rng.bernoulli(0.5)) {
      members.push_back(v);
    }
  }
  if (members.empty()) {
    members.push_back(static_cast<Vertex>(rng.below(n)));
  }
  return VertexSet(n, std::move(members));
}

void campaign_oracle_suite(Report &r) {
  const auto corpus = builtin_corpus();
  std::vector<Pattern> patterns;
  for (unsigned m = 2; m <= 7; ++m) {
    patterns.push_back(Pattern::cycle(m));
  }
  for (unsigned m = 0; m <= 6; ++m) {
    patterns.push_back(Pattern::path(m));
  }
  patterns.push_back(Pattern::figure_eight(1, 1));

  auto add = [&](const std::string &name, bool pass, Json data) {
    TrialRecord t;
    t.index = r.trials.size();
    t.seed = r.config.seed;
    t.pass = pass;
    t.data = Json{{"check", name}};
    t.data.update(data);
    r.trials.push_back(std::move(t));
  };

  for (const auto &[name, g] : corpus) {
    if (g.vertex_count() > 10) {
      continue;
    }
    for (const auto &h : patterns) {
      const Count fast = hom_count(h, g);
      const std::uint64_t brute = brute_hom_count(h.graph(), g);
      add("hom:" + name + ":" + h.name(), fast == brute,
          Json{{"value", count_json(fast)}, {"reference", brute}});
    }
  }

  for (const auto &[name, g] : corpus) {
    if (!degree_profile(g).regular_degree || g.vertex_count() > 200) {
      continue;
    }
    const auto cert = certify_ndl(g);
    for (unsigned k = 1; k <= 4; ++k) {
      const double h = to_double(hom_count_cycle(g, 2 * k));
      const double b = even_cycle_trace_bound(cert, k);
      add("even-trace:" + name + ":k" + std::to_string(k), h <= b + bound_slack(b),
          Json{{"value", h}, {"reference", b}});
    }
    for (unsigned k = 1; k <= 3; ++k) {
      const double odd = to_double(hom_count_cycle(g, 2 * k + 1));
      const double even = to_double(hom_count_cycle(g, 2 * k));
      const double lhs = std::abs(odd - std::pow(static_cast<double>(cert.d), 2.0 * k + 1));
      const double rhs = cert.lambda * even;
      add("odd-trace:" + name + ":k" + std::to_string(k), lhs <= rhs + bound_slack(rhs) + 1e-9,
          Json{{"value", lhs}, {"reference", rhs}});
    }
  }

  for (unsigned k = 1; k <= 2; ++k) {
    const auto covers = derivative_cover_counts(k);
    const bool ok = std::all_of(covers.begin(), covers.end(), [](const CoverCount &cc) {
      return cc.times_covered == cc.expected;
    });
    add("cover:k" + std::to_string(k), ok, Json{{"subsets", covers.size()}});
  }

  const std::vector<std::string> hosts = {"K4", "K5", "K6", "K7", "K8", "paley5", "paley13",
                                          "rr10_3_s1"};
  auto host_of = [&](const std::string &name) -> const Graph & {
    for (const auto &ng : corpus) {
      if (ng.name == name) {
        return ng.graph;
      }
    }
    throw InputError("oracle-suite: corpus graph '" + name + "' missing");
  };
  Rng rng(r.config.seed);
  for (std::size_t i = 0; i < r.config.trials; ++i) {
    const auto &name = hosts[rng.below(hosts.size())];
    const Graph &host = host_of(name);
    const VertexSet x = random_subset(host.vertex_count(), rng);
    const auto gamma = EdgeFunction::indicator(host, x);
    const auto g = random_colour(host, x, rng);
    const Pattern h = Pattern::cycle(rng.bernoulli(0.5) ? 3 : 5);
    const auto check = cancel_identity_check(h, gamma, g);
    add("identity:" + name + ":" + h.name() + ":" + std::to_string(i),
        check.max_abs_diff <= 1e-12, Json{{"value", check.lhs}, {"reference", check.rhs}});

    const auto f = signed_difference(gamma, g);
    const Pattern q = rng.bernoulli(0.5) ? Pattern::cycle(3 + static_cast<unsigned>(rng.below(5)))
                                         : Pattern::path(1 + static_cast<unsigned>(rng.below(7)));
    const double z = rng.unit();
    const double closed = q_polynomial(q, gamma, f, z);
    const double brute = q_polynomial_brute(q, gamma, f, z);
    add("q-brute:" + name + ":" + q.name() + ":" + std::to_string(i),
        std::abs(closed - brute) <= 1e-12, Json{{"value", closed}, {"reference", brute}});
  }
  aggregate(r);
}

} // namespace

// ------------------------------------------------------------------- config

const std::vector<std::string> &experiment_commands() {
  static const std::vector<std::string> commands = {
      "gen",        "certify",       "count",      "verify-commonality",
      "verify-turan", "regularize", "oracle-suite", "probe-bipartite"};
  return commands;
}

void ExperimentConfig::validate() const {
  const auto &cmds = experiment_commands();
  if (std::find(cmds.begin(), cmds.end(), command) == cmds.end()) {
    throw InputError("unknown command '" + command + "'");
  }
  if (k < 1 || 2 * k + 1 > 63) {
    throw InputError("k must lie in [1, 31]");
  }
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw InputError("delta must lie in [0, 1)");
  }
  if (!(margin > 0.0 && margin <= 1.0)) {
    throw InputError("margin must lie in (0, 1]");
  }
  if (!(keep >= 0.0 && keep <= 1.0)) {
    throw InputError("keep must lie in [0, 1]");
  }
  if (trials < 1) {
    throw InputError("trials must be at least 1");
  }
  RegularizationParams{alpha, epsilon, rho, eta}.validate();
  Pattern::parse(pattern);
  const bool needs_host = command != "gen" && command != "oracle-suite";
  if (needs_host && host.empty()) {
    throw InputError(command + " requires --host");
  }
  if (command == "gen" && generator.empty()) {
    throw InputError("gen requires a generator such as 'paley 13'");
  }
}

std::string ExperimentConfig::to_text() const {
  std::ostringstream os;
  os << "command = " << command << '\n'
     << "host = " << host << '\n'
     << "sub = " << sub << '\n'
     << "subset = " << subset << '\n'
     << "generator = " << generator << '\n'
     << "pattern = " << pattern << '\n'
     << "k = " << k << '\n'
     << "alpha = " << format_double(alpha) << '\n'
     << "delta = " << format_double(delta) << '\n'
     << "epsilon = " << format_double(epsilon) << '\n'
     << "rho = " << format_double(rho) << '\n'
     << "eta = " << format_double(eta) << '\n'
     << "margin = " << format_double(margin) << '\n'
     << "keep = " << format_double(keep) << '\n'
     << "trials = " << trials << '\n'
     << "seed = " << seed << '\n'
     << "out = " << out << '\n'
     << "injective = " << (injective ? "true" : "false") << '\n'
     << "timing = " << (timing ? "true" : "false") << '\n';
  return os.str();
}

void ExperimentConfig::set(const std::string &key, const std::string &value) {
  if (key == "command") {
    command = value;
  } else if (key == "host") {
    host = value;
  } else if (key == "sub") {
    sub = value;
  } else if (key == "subset") {
    subset = value;
  } else if (key == "generator") {
    generator = value;
  } else if (key == "pattern") {
    pattern = value;
  } else if (key == "k") {
    const auto v = parse_unsigned(key, value);
    if (v > std::numeric_limits<unsigned>::max()) {
      throw InputError("config: k out of range");
    }
    k = static_cast<unsigned>(v);
  } else if (key == "alpha") {
    alpha = parse_double(key, value);
  } else if (key == "delta") {
    delta = parse_double(key, value);
  } else if (key == "epsilon") {
    epsilon = parse_double(key, value);
  } else if (key == "rho") {
    rho = parse_double(key, value);
  } else if (key == "eta") {
    eta = parse_double(key, value);
  } else if (key == "margin") {
    margin = parse_double(key, value);
  } else if (key == "keep") {
    keep = parse_double(key, value);
  } else if (key == "trials") {
    trials = parse_unsigned(key, value);
  } else if (key == "seed") {
    seed = parse_unsigned(key, value);
  } else if (key == "out") {
    out = value;
  } else if (key == "injective") {
    injective = parse_bool(key, value);
  } else if (key == "timing") {
    timing = parse_bool(key, value);
  } else {
    throw InputError("config: unknown key '" + key + "'");
  }
}

std::string ExperimentConfig::get(const std::string &key) const {
  std::istringstream in(to_text());
  std::string line;
  const std::string prefix = key + " = ";
  while (std::getline(in, line)) {
    if (line.compare(0, prefix.size(), prefix) == 0) {
      return line.substr(prefix.size());
    }
  }
  throw InputError("config: unknown key '" + key + "'");
}

ExperimentConfig ExperimentConfig::from_text(const std::string &text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') {
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    c.set(trim(content.substr(0, eq)), trim(content.substr(eq + 1)));
  }
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

Json ExperimentConfig::to_json() const {
  return Json{{"command", command},     {"host", host},       {"sub", sub},
              {"subset", subset},       {"generator", generator},
              {"pattern", pattern},     {"k", k},             {"alpha", alpha},
              {"delta", delta},         {"epsilon", epsilon}, {"rho", rho},
              {"eta", eta},             {"margin", margin},   {"keep", keep},
              {"trials", trials},       {"seed", seed},       {"out", out},
              {"injective", injective}, {"timing", timing}};
}

// --------------------------------------------------------------- generators

Graph resolve_graph(const std::string &spec, Seed seed) {
  if (spec.empty()) {
    throw InputError("empty graph specification");
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    return read_edge_list_file(spec);
  }
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto family = spec.substr(0, colon);
    const auto args = parse_list(spec, spec.substr(colon + 1));
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi) {
        throw InputError("generator '" + spec + "': wrong number of parameters");
      }
    };
    if (family == "paley") {
      need(1, 1);
      return paley(args[0]);
    }
    if (family == "random-regular" || family == "rr") {
      need(2, 3);
      return random_regular(args[0], args[1], args.size() == 3 ? args[2] : seed);
    }
    if (family == "complete") {
      need(1, 1);
      return complete_graph(args[0]);
    }
    if (family == "cycle") {
      need(1, 1);
      return cycle_graph(args[0]);
    }
    if (family == "path") {
      need(1, 1);
      return path_graph(args[0]);
    }
    if (family == "complete-bipartite") {
      need(2, 2);
      return complete_bipartite(args[0], args[1]);
    }
    if (family == "empty") {
      need(1, 1);
      return empty_graph(args[0]);
    }
    throw InputError("unknown generator family '" + family + "'");
  }
  for (auto &ng : builtin_corpus()) {
    if (ng.name == spec) {
      return std::move(ng.graph);
    }
  }
  throw InputError("'" + spec + "' is neither a file nor a known generator");
}

// ------------------------------------------------------------------ reports

Json Report::to_json() const {
  Json trials_json = Json::array();
  for (const auto &t : trials) {
    trials_json.push_back(Json{{"index", t.index},
                               {"seed", t.seed},
                               {"pass", t.pass},
                               {"vacuous", t.vacuous},
                               {"data", t.data}});
  }
  Json out{{"command", config.command},
           {"config", config.to_json()},
           {"result", result},
           {"trials", trials_json},
           {"pass", pass}};
  if (seconds) {
    out["seconds"] = *seconds;
  }
  return out;
}

std::string Report::to_csv() const {
  std::vector<std::string> columns;
  if (!trials.empty()) {
    for (const auto &[key, value] : trials.front().data.items()) {
      if (value.is_primitive()) {
        columns.push_back(key);
      }
    }
  }
  auto cell = [](const Json &v) -> std::string {
    if (v.is_null()) {
      return "";
    }
    if (v.is_string()) {
      const auto s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string quoted = "\"";
      for (char ch : s) {
        if (ch == '"') {
          quoted += '"';
        }
        quoted += ch;
      }
      return quoted + "\"";
    }
    return v.dump();
  };
  std::ostringstream os;
  os << "index,seed,pass,vacuous";
  for (const auto &col : columns) {
    os << ',' << col;
  }
  os << '\n';
  for (const auto &t : trials) {
    os << t.index << ',' << t.seed << ',' << (t.pass ? 1 : 0) << ',' << (t.vacuous ? 1 : 0);
    for (const auto &col : columns) {
      os << ',' << (t.data.contains(col) ? cell(t.data[col]) : std::string());
    }
    os << '\n';
  }
  return os.str();
}

Report run(const ExperimentConfig &config) {
  config.validate();
  Report r;
  r.config = config;
  const auto start = std::chrono::steady_clock::now();
  const auto &cmd = config.command;
  if (cmd == "gen") {
    campaign_gen(r);
  } else if (cmd == "certify") {
    campaign_certify(r);
  } else if (cmd == "count") {
    campaign_count(r);
  } else if (cmd == "verify-commonality") {
    campaign_commonality(r);
  } else if (cmd == "verify-turan") {
    campaign_turan(r);
  } else if (cmd == "regularize") {
    campaign_regularize(r);
  } else if (cmd == "oracle-suite") {
    campaign_oracle_suite(r);
  } else {
    campaign_probe(r);
  }
  if (config.timing) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

namespace {

std::string csv_path(const std::string &json_path) {
  std::filesystem::path p(json_path);
  if (p.extension() == ".json") {
    return p.replace_extension(".csv").string();
  }
  return json_path + ".csv";
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream f(path);
  if (!f) {
    throw InputError("cannot open '" + path + "' for writing");
  }
  f << text;
  if (!f) {
    throw InputError("write to '" + path + "' failed");
  }
}

} // namespace

void write_report(const Report &report, std::ostream &fallback) {
  const auto &out = report.config.out;
  if (report.graph) {
    if (out.empty()) {
      write_edge_list(fallback, *report.graph);
    } else {
      write_edge_list_file(out, *report.graph);
    }
    return;
  }
  const auto json = report.to_json().dump(2) + "\n";
  if (out.empty()) {
    fallback << json;
    return;
  }
  write_text(out, json);
  if (!report.trials.empty()) {
    write_text(csv_path(out), report.to_csv());
  }
}

std::string pass_fail_table(const Report &report) {
  std::size_t width = 5;
  auto label = [](const TrialRecord &t) {
    if (t.data.contains("check") && t.data["check"].is_string()) {
      return t.data["check"].get<std::string>();
    }
    return "trial " + std::to_string(t.index);
  };
  for (const auto &t : report.trials) {
    width = std::max(width, label(t).size());
  }
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto &t : report.trials) {
    const char *verdict = t.vacuous ? "VACUOUS" : (t.pass ? "PASS" : "FAIL");
    failed += (!t.vacuous && !t.pass) ? 1 : 0;
    os << label(t) << std::string(width + 2 - label(t).size(), ' ') << verdict << '\n';
  }
  os << report.trials.size() << " checks, " << failed << " failed: "
     << (report.pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

} // namespace oddcycle
