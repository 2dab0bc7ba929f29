#pragma once

#include "oddcycle/graph.hpp"

#include <cstddef>
#include <string>

namespace oddcycle {

/// Small pattern graphs H: cycles C_m (C_2 is the single edge K_2), paths
/// P_m with m edges, and figure-eights C_{2q} and C_{2r+1} glued at a vertex.
struct Pattern {
  enum class Kind { cycle, path, figure_eight };

  Kind kind = Kind::cycle;
  unsigned length = 3; // m for cycles and paths
  unsigned q = 0;      // figure-eight only
  unsigned r = 0;

  static Pattern cycle(unsigned m);
  static Pattern path(unsigned m);
  static Pattern figure_eight(unsigned q, unsigned r);

  /// Accepts "c5", "p4", "fig8:1,2" (case-insensitive prefix).
  static Pattern parse(const std::string &text);

  std::string name() const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;

  /// Cycles and paths are labelled along their edge order: path edge i is
  /// {i, i+1}; cycle edge i is {i, i+1 mod m}. In a figure-eight vertex 0 is
  /// the shared vertex.
  Graph graph() const;

  friend bool operator==(const Pattern &, const Pattern &) = default;
};

} // namespace oddcycle
