#pragma once

#include "oddcycle/graph.hpp"
#include "oddcycle/pattern.hpp"
#include "oddcycle/spectral.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace oddcycle {

/// Exact counts. Computations run in 64-bit arithmetic with overflow
/// detection and are redone in arbitrary precision when a value overflows.
using Count = boost::multiprecision::cpp_int;

/// w_k(x,y): number of k-edge walks from x to y, i.e. the entries of A^k.
class WalkTable {
public:
  unsigned length() const { return length_; }
  std::size_t size() const { return n_; }
  Count at(Vertex x, Vertex y) const;
  Count row_sum(Vertex x) const;
  // True once some entry did not fit in 64 bits.
  bool wide() const { return std::holds_alternative<std::vector<Count>>(entries_); }

private:
  friend WalkTable walk_table(const Graph &g, unsigned k);

  unsigned length_ = 0;
  std::size_t n_ = 0;
  std::variant<std::vector<std::uint64_t>, std::vector<Count>> entries_;
};

WalkTable walk_table(const Graph &g, unsigned k);

/// tr(A^m); m = 2 gives 2 e(G). Throws InputError for m < 2.
Count hom_count_cycle(const Graph &g, unsigned m);

/// Sum of all entries of A^m; m = 0 gives n.
Count hom_count_path(const Graph &g, unsigned m);

/// h_{C_{2k+1}}(G; x) = sum_{y,z} w_k(x,y) 1(y,z) w_k(x,z) for every root x.
std::vector<Count> rooted_odd_cycle_counts(const Graph &g, unsigned k);

inline constexpr std::uint64_t default_extension_budget = 1'000'000'000;

/// Injective homomorphisms C_m -> G by depth-first search (each unlabelled
/// m-cycle is counted 2m times). Throws ResourceError once more than
/// `budget` partial extensions have been explored.
Count injective_count_cycle(const Graph &g, unsigned m,
                            std::uint64_t budget = default_extension_budget);

/// Some injective m-cycle (v_0, ..., v_{m-1}) of G, or nullopt.
std::optional<std::vector<Vertex>>
find_cycle(const Graph &g, unsigned m,
           std::uint64_t budget = default_extension_budget);

/// Homomorphisms from C_{2q} and C_{2r+1} glued at one vertex:
/// sum_x (A^{2q})_{xx} (A^{2r+1})_{xx}.
Count figure_eight_hom_count(const Graph &g, unsigned q, unsigned r);

/// Upper bound on figure-eight homomorphisms into an (n,d,lambda)-graph:
///   d^{2(q+r)+1}/n + lambda^{2q-2} d^{2r+2} + lambda d^{2(q+r)}
///     + lambda^{2(q+r)-1} d n.
double figure_eight_bound(const NdlCertificate &cert, unsigned q, unsigned r);

struct FigureEightCheck {
  Count count;
  double bound = 0.0;
  bool holds = false;
};

/// Throws CertificationError if g is not the regular graph cert describes.
FigureEightCheck figure_eight_bound_check(const NdlCertificate &cert,
                                          const Graph &g, unsigned q,
                                          unsigned r);

/// Homomorphism count for any supported pattern via walk matrices.
Count hom_count(const Pattern &h, const Graph &g);

inline constexpr std::size_t brute_max_pattern_vertices = 8;
inline constexpr std::size_t brute_max_host_vertices = 12;

/// Ground-truth homomorphism count by exhaustive vertex-map enumeration
/// (backtracking over partial maps, so maps that already break an edge are
/// not extended). Limited to |V(H)| <= 8 and |V(G)| <= 12; larger inputs
/// throw ResourceError.
std::uint64_t brute_hom_count(const Graph &h, const Graph &g);

struct CountReport {
  std::string graph_id;
  Pattern pattern;
  Count hom;
  std::optional<Count> injective;
  double density = 0.0; // hom / n^{|V(H)|}
};

/// Injective counts are only available for cycles of length >= 3.
CountReport count_report(const std::string &graph_id, const Graph &g,
                         const Pattern &pattern, bool with_injective);

double to_double(const Count &c);

} // namespace oddcycle
