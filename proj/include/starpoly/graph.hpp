#pragma once
// Small undirected multigraphs (loops and parallel edges allowed) plus the
// metrics the star-graph analysis needs: girth in the reduced-closed-path
// sense, diameter, bipartiteness, components, and exact isomorphism testing
// for desk-scale components.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starpoly {

struct Edge {
  int u = 0, v = 0;   // u <= v
  int mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge list is kept sorted by (u, v) and coalesced, so two graphs are equal
// as edge multisets iff their edges() vectors are equal.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);

  static Multigraph from_pairs(int vertex_count, std::span<const std::pair<int, int>> pairs);

  void add_edge(int u, int v, int multiplicity = 1);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const;  // sum of multiplicities
  const std::vector<Edge>& edges() const { return edges_; }
  int multiplicity(int u, int v) const;

  // Degree counts each incident edge with multiplicity; a loop adds 2.
  std::vector<int> degrees() const;

  bool has_loop() const;
  bool has_parallel_edge() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

struct GraphProfile {
  int vertex_count = 0;
  int edge_count = 0;
  std::optional<int> girth;     // empty: no reduced closed path at all
  std::optional<int> diameter;  // empty: disconnected (or no vertices)
  std::optional<int> regular_degree;
  int min_degree = 0;
  int max_degree = 0;
  bool bipartite = true;
  int component_count = 0;
  std::vector<int> component_of;            // vertex -> component id
  std::vector<std::vector<int>> components; // sorted vertex lists, by component id
};

// Girth is the minimal length of a reduced closed path: consecutive steps may
// not reuse the same edge instance, so a loop gives 1 and a parallel pair
// gives 2; otherwise it is the shortest cycle of the underlying simple graph.
GraphProfile graph_profile(const Multigraph& g);

std::vector<std::vector<int>> graph_components(const Multigraph& g);

// Subgraph on the given vertices, relabeled 0..k-1 in the order given.
Multigraph induced_subgraph(const Multigraph& g, std::span<const int> vertices);

// circ_n(J): vertices 0..n-1, one edge i -- i+j (mod n) per i and per jump j.
// Jumps may repeat; j == 0 yields loops and j == n/2 doubled edges.
Multigraph circulant(int n, std::span<const int> jumps);

struct IsomorphismTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kIsomorphismVertexLimit = 64;

// Exact isomorphism of edge multisets via degree-refinement backtracking.
// Throws IsomorphismTooLarge beyond kIsomorphismVertexLimit vertices.
bool graphs_isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace starpoly
