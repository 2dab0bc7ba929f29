#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace oddcycle {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored once with u < v, sorted
/// lexicographically; neighbour lists are sorted ascending.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from arbitrary (u,v) pairs. Duplicates (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw
  /// InputError.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Sorted set of distinct vertex labels drawn from a host with host_n
/// vertices.
class VertexSet {
public:
  VertexSet() = default;

  /// Sorts and validates; duplicates or labels >= host_n throw InputError.
  VertexSet(std::size_t host_n, std::vector<Vertex> members);

  static VertexSet all(std::size_t host_n);

  std::size_t host_size() const { return host_n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Vertex> members() const { return members_; }
  bool contains(Vertex v) const;

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
  std::size_t host_n_ = 0;
  std::vector<Vertex> members_;
};

struct InducedSubgraph {
  Graph graph;
  // labels[i] is the host vertex relabelled to i.
  std::vector<Vertex> labels;
};

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &x);

/// Edges of host that are not in sub. Throws ContainmentError when sub has
/// an edge absent from host, InputError on vertex-count mismatch.
Graph complement_within(const Graph &host, const Graph &sub);

/// Throws ContainmentError unless E(sub) is a subset of E(host) on the same
/// vertex count.
void require_subgraph(const Graph &host, const Graph &sub);

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::optional<std::size_t> regular_degree;
};

DegreeProfile degree_profile(const Graph &g);

// Text edge-list interchange: first line "n m", then m lines "u v".
// Everything after '#' on a line is ignored.
Graph read_edge_list(std::istream &in);
Graph read_edge_list_file(const std::string &path);
void write_edge_list(std::ostream &out, const Graph &g);
void write_edge_list_file(const std::string &path, const Graph &g);

// Vertex-set file: whitespace-separated labels, '#' comments. The host size
// is supplied by the caller.
VertexSet read_vertex_set(std::istream &in, std::size_t host_n);
VertexSet read_vertex_set_file(const std::string &path, std::size_t host_n);

} // namespace oddcycle
