#include "oddcycle/constructions.hpp"

#include "oddcycle/errors.hpp"

#include <algorithm>
#include <numeric>

namespace oddcycle {

bool is_prime(std::uint64_t q) {
  if (q < 2) {
    return false;
  }
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t q) {
  std::vector<bool> is_square(q, false);
  for (std::uint64_t x = 1; x < q; ++x) {
    is_square[(x * x) % q] = true;
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r < q; ++r) {
    if (is_square[r]) {
      out.push_back(r);
    }
  }
  return out;
}

Graph paley(std::uint64_t q) {
  if (!is_prime(q)) {
    throw InputError("paley: q = " + std::to_string(q) + " is not prime");
  }
  if (q % 4 != 1) {
    throw InputError("paley: q = " + std::to_string(q) +
                     " is not congruent to 1 mod 4");
  }
  if (q > (std::uint64_t{1} << 20)) {
    throw InputError("paley: q too large for a dense construction");
  }
  const auto residues = quadratic_residues(q);
  std::vector<Edge> edges;
  edges.reserve(q * residues.size() / 2);
  for (std::uint64_t u = 0; u < q; ++u) {
    for (auto r : residues) {
      const auto v = (u + r) % q;
      // -1 is a square when q = 1 mod 4, so each edge appears from both ends.
      if (u < v) {
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Graph::from_edge_list(q, edges);
}

Graph random_regular(std::size_t n, std::size_t d, Seed seed) {
  if (d >= n) {
    throw InputError("random_regular: need d < n (d = " + std::to_string(d) +
                     ", n = " + std::to_string(n) + ")");
  }
  if ((n * d) % 2 != 0) {
    throw InputError("random_regular: n*d must be even");
  }
  Rng rng(seed);
  std::vector<Vertex> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i] = static_cast<Vertex>(i / d);
  }
  std::vector<Edge> edges;
  for (std::size_t attempt = 0; attempt < random_regular_max_restarts; ++attempt) {
    rng.shuffle(points);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      const auto u = points[i];
      const auto v = points[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) {
      continue;
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      continue;
    }
    return Graph::from_edge_list(n, edges);
  }
  throw GenerationError("random_regular: no simple pairing after " +
                        std::to_string(random_regular_max_restarts) +
                        " restarts (n = " + std::to_string(n) +
                        ", d = " + std::to_string(d) + ")");
}

namespace {

void require_positive(std::size_t value, const char *what) {
  if (value < 1) {
    throw InputError(std::string(what) + " must be at least 1");
  }
}

} // namespace

Graph complete_graph(std::size_t n) {
  require_positive(n, "complete: n");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw InputError("cycle: n must be at least 3");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  }
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(std::size_t edge_count) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < edge_count; ++u) {
    edges.emplace_back(u, u + 1);
  }
  return Graph::from_edge_list(edge_count + 1, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require_positive(a, "complete_bipartite: a");
  require_positive(b, "complete_bipartite: b");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) {
      edges.emplace_back(u, static_cast<Vertex>(a + v));
    }
  }
  return Graph::from_edge_list(a + b, edges);
}

Graph empty_graph(std::size_t n) {
  require_positive(n, "empty: n");
  return Graph::from_edge_list(n, {});
}

Graph random_edge_subgraph(const Graph &g, double keep, Seed seed) {
  if (!(keep >= 0.0 && keep <= 1.0)) {
    throw InputError("keep probability must lie in [0,1]");
  }
  Rng rng(seed);
  std::vector<Edge> kept;
  for (const auto &e : g.edges()) {
    if (rng.bernoulli(keep)) {
      kept.push_back(e);
    }
  }
  return Graph::from_edge_list(g.vertex_count(), kept);
}

Graph random_edge_sample(const Graph &g, std::size_t count, Seed seed) {
  if (count > g.edge_count()) {
    throw InputError("cannot sample " + std::to_string(count) +
                     " edges from a graph with " +
                     std::to_string(g.edge_count()));
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Rng rng(seed);
  rng.shuffle(edges);
  edges.resize(count);
  return Graph::from_edge_list(g.vertex_count(), edges);
}

Graph random_bipartite_cut(const Graph &g, Seed seed) {
  const auto n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  Rng rng(seed);
  rng.shuffle(order);
  std::vector<bool> left(n, false);
  for (std::size_t i = 0; i < n / 2; ++i) {
    left[order[i]] = true;
  }
  std::vector<Edge> cut;
  for (auto [u, v] : g.edges()) {
    if (left[u] != left[v]) {
      cut.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, cut);
}

std::vector<NamedGraph> builtin_corpus() {
  std::vector<NamedGraph> corpus;
  for (std::size_t n = 2; n <= 8; ++n) {
    corpus.push_back({"K" + std::to_string(n), complete_graph(n)});
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    corpus.push_back({"C" + std::to_string(n), cycle_graph(n)});
  }
  for (std::uint64_t q : {5, 13, 17, 29, 37, 41, 101}) {
    corpus.push_back({"paley" + std::to_string(q), paley(q)});
  }
  corpus.push_back({"K3,3", complete_bipartite(3, 3)});
  corpus.push_back({"K4,4", complete_bipartite(4, 4)});
  {
    // Petersen graph: outer 5-cycle, inner pentagram, spokes.
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
      e.emplace_back(i, 5 + i);
    }
    corpus.push_back({"petersen", Graph::from_edge_list(10, e)});
  }
  corpus.push_back({"rr10_3_s1", random_regular(10, 3, 1)});
  corpus.push_back({"rr12_4_s7", random_regular(12, 4, 7)});
  corpus.push_back({"rr30_3_s2", random_regular(30, 3, 2)});
  corpus.push_back({"empty5", empty_graph(5)});
  corpus.push_back({"P3", path_graph(3)});
  corpus.push_back({"K2,3", complete_bipartite(2, 3)});
  {
    std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {0, 6}};
    corpus.push_back({"bowtie_tail", Graph::from_edge_list(7, e)});
  }
  return corpus;
}

} // namespace oddcycle
