#include "oddcycle/graph.hpp"

#include "oddcycle/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace oddcycle {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  Graph g;
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(n, {});
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto &row : g.adjacency_) {
    std::sort(row.begin(), row.end());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) {
    return false;
  }
  const auto &row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

VertexSet::VertexSet(std::size_t host_n, std::vector<Vertex> members)
    : host_n_(host_n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InputError("vertex set contains a duplicate label");
  }
  if (!members_.empty() && members_.back() >= host_n_) {
    throw InputError("vertex " + std::to_string(members_.back()) +
                     " is outside a host with " + std::to_string(host_n_) +
                     " vertices");
  }
}

VertexSet VertexSet::all(std::size_t host_n) {
  std::vector<Vertex> m(host_n);
  for (std::size_t i = 0; i < host_n; ++i) {
    m[i] = static_cast<Vertex>(i);
  }
  return VertexSet(host_n, std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &x) {
  if (x.host_size() != g.vertex_count()) {
    throw InputError("vertex set host size " + std::to_string(x.host_size()) +
                     " does not match graph with " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> relabel(g.vertex_count(), absent);
  auto members = x.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    relabel[members[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (auto [u, v] : g.edges()) {
    if (relabel[u] != absent && relabel[v] != absent) {
      kept.emplace_back(relabel[u], relabel[v]);
    }
  }
  return {Graph::from_edge_list(members.size(), kept),
          std::vector<Vertex>(members.begin(), members.end())};
}

void require_subgraph(const Graph &host, const Graph &sub) {
  if (host.vertex_count() != sub.vertex_count()) {
    throw InputError("subgraph has " + std::to_string(sub.vertex_count()) +
                     " vertices but host has " +
                     std::to_string(host.vertex_count()));
  }
  for (auto [u, v] : sub.edges()) {
    if (!host.adjacent(u, v)) {
      throw ContainmentError("edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "} is not an edge of the host");
    }
  }
}

Graph complement_within(const Graph &host, const Graph &sub) {
  require_subgraph(host, sub);
  std::vector<Edge> rest;
  auto sub_edges = sub.edges();
  // Both edge lists are sorted, so a single merge pass suffices.
  std::set_difference(host.edges().begin(), host.edges().end(),
                      sub_edges.begin(), sub_edges.end(),
                      std::back_inserter(rest));
  return Graph::from_edge_list(host.vertex_count(), rest);
}

DegreeProfile degree_profile(const Graph &g) {
  DegreeProfile p;
  if (g.vertex_count() == 0) {
    p.regular_degree = 0;
    return p;
  }
  p.min_degree = g.degree(0);
  p.max_degree = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  if (p.min_degree == p.max_degree) {
    p.regular_degree = p.min_degree;
  }
  return p;
}

namespace {

// Yields whitespace-separated tokens with '#' comments stripped, tracking
// line numbers for error messages.
class TokenReader {
public:
  explicit TokenReader(std::istream &in) : in_(in) {}

  bool next(std::string &token) {
    while (!(line_ >> token)) {
      std::string raw;
      if (!std::getline(in_, raw)) {
        return false;
      }
      ++line_number_;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      line_.clear();
      line_.str(raw);
    }
    return true;
  }

  std::uint64_t next_unsigned(const char *what) {
    std::string token;
    if (!next(token)) {
      throw InputError(std::string("unexpected end of input while reading ") +
                       what);
    }
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("line " + std::to_string(line_number_) + ": expected " +
                       what + ", got '" + token + "'");
    }
    try {
      return std::stoull(token);
    } catch (const std::out_of_range &) {
      throw InputError("line " + std::to_string(line_number_) + ": " + what +
                       " out of range");
    }
  }

private:
  std::istream &in_;
  std::istringstream line_;
  std::size_t line_number_ = 0;
};

std::ifstream open_or_throw(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  return in;
}

} // namespace

Graph read_edge_list(std::istream &in) {
  TokenReader reader(in);
  const auto n = reader.next_unsigned("vertex count");
  const auto m = reader.next_unsigned("edge count");
  if (n > std::uint64_t{1} << 31) {
    throw InputError("vertex count too large");
  }
  std::vector<Edge> pairs;
  pairs.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto u = reader.next_unsigned("edge endpoint");
    const auto v = reader.next_unsigned("edge endpoint");
    if (u >= n || v >= n) {
      throw InputError("edge " + std::to_string(i) + " has an endpoint >= " +
                       std::to_string(n));
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (reader.next(extra)) {
    throw InputError("trailing data after " + std::to_string(m) +
                     " edges: '" + extra + "'");
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

Graph read_edge_list_file(const std::string &path) {
  auto in = open_or_throw(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void write_edge_list_file(const std::string &path, const Graph &g) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write '" + path + "'");
  }
  write_edge_list(out, g);
}

VertexSet read_vertex_set(std::istream &in, std::size_t host_n) {
  TokenReader reader(in);
  std::vector<Vertex> members;
  std::string token;
  while (reader.next(token)) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("vertex set: expected a label, got '" + token + "'");
    }
    const auto v = std::stoull(token);
    if (v >= host_n) {
      throw InputError("vertex set: label " + token + " >= " +
                       std::to_string(host_n));
    }
    members.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(host_n, std::move(members));
}

VertexSet read_vertex_set_file(const std::string &path, std::size_t host_n) {
  auto in = open_or_throw(path);
  return read_vertex_set(in, host_n);
}

} // namespace oddcycle
