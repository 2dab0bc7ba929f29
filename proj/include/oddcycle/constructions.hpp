#pragma once

#include "oddcycle/graph.hpp"
#include "oddcycle/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace oddcycle {

/// Paley graph on Z/q: u ~ v iff u - v is a nonzero square mod q.
/// Requires q prime with q = 1 (mod 4); throws InputError otherwise.
Graph paley(std::uint64_t q);

/// Nonzero quadratic residues mod q, ascending.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t q);

bool is_prime(std::uint64_t q);

/// Uniform-ish simple d-regular graph from the pairing model, restarting on
/// any loop or multi-edge. Throws InputError if n*d is odd or d >= n, and
/// GenerationError after 10^4 failed attempts.
Graph random_regular(std::size_t n, std::size_t d, Seed seed);

inline constexpr std::size_t random_regular_max_restarts = 10'000;

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t edges);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph empty_graph(std::size_t n);

/// Keeps each edge of g independently with probability keep.
Graph random_edge_subgraph(const Graph &g, double keep, Seed seed);

/// Uniformly random subset of exactly `count` edges of g.
Graph random_edge_sample(const Graph &g, std::size_t count, Seed seed);

/// Edges of g crossing a uniformly random balanced bipartition (part sizes
/// floor(n/2) and ceil(n/2)). Odd-cycle-free by construction.
Graph random_bipartite_cut(const Graph &g, Seed seed);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Fixed graphs used by the oracle suite and the acceptance tests: complete
/// graphs, cycles, Paley graphs, seeded random regular graphs, plus a few
/// non-regular graphs for the counting oracles.
std::vector<NamedGraph> builtin_corpus();

} // namespace oddcycle
