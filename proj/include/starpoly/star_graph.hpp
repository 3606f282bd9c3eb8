#pragma once
// Star graphs of presentations over x_0..x_{n-1}: 2n vertices (one per
// generator and one per inverse), one edge x -- y per inverse-pair of words
// of the form x y^-1 u in the symmetrized closure of the relator set.
//
// Two independent constructions are kept deliberately separate so they can
// cross-check each other:
//   build_star_graph      walks relators (roots taken, redundant ones dropped;
//                         both leave the star graph unchanged)
//   predicted_star_graph  reads the edges straight off the subscript
//                         multisets of a cyclic presentation and also
//                         predicts the component structure

#include <string>
#include <utility>
#include <vector>

#include "starpoly/graph.hpp"
#include "starpoly/word.hpp"

namespace starpoly {

enum class StarProvenance { Generic, Predicted };

struct StarGraph {
  int n = 0;  // rank; vertex i is x_i, vertex n+i is x_i^-1
  StarProvenance provenance = StarProvenance::Generic;
  Multigraph graph;  // 2n vertices

  static int pos_vertex(int i) { return i; }
  int neg_vertex(int i) const { return n + i; }
  std::string vertex_name(int v) const;
};

// Generic route. Relators must be nonempty and cyclically reduced.
StarGraph build_star_graph(int n, std::span<const Word> relators);
StarGraph build_star_graph(const CyclicPresentation& p);

struct PredictedComponent {
  std::vector<int> positive;      // subscripts i with x_i in the component
  std::vector<int> negative;      // subscripts i with x_i^-1 in the component
  std::string isomorphism_type;   // "shift image of component 0" or "circ_m({...})"
};

struct ComponentPrediction {
  int count = 0;
  std::vector<PredictedComponent> components;
};

// Multiset route, with the component prediction: for a non-alternating word
// the d = gcd(n, A, B, {q - q0}) components are shift images of one another
// and component j holds the x_i with i = j (mod d) and the x_i^-1 with
// i = j + q0 (mod d); for an alternating word there are dA + dB components,
// circulants circ_{n/dA}({a/dA}) on the positive side and circ_{n/dB}({b/dB})
// on the negative side.
// Throws std::invalid_argument if p is redundant or a proper power.
std::pair<StarGraph, ComponentPrediction> predicted_star_graph(const CyclicPresentation& p);

// Whether x_i -> x_{i+1}, x_i^-1 -> x_{i+1}^-1 preserves the edge multiset.
bool shift_is_automorphism(const StarGraph& g);

// All components pairwise isomorphic. Components related by a shift power are
// matched first; remaining pairs fall back to exact isomorphism, which throws
// IsomorphismTooLarge past kIsomorphismVertexLimit vertices.
bool components_isomorphic(const StarGraph& g);

// Deterministic DOT serialization: vertices x<i> / x<i>_inv each carrying a
// component attribute, then edges sorted by endpoint pair, parallel copies on
// consecutive lines.
std::string to_dot(const StarGraph& g);

}  // namespace starpoly
