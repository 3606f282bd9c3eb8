#pragma once
// Recognition of incidence graphs of generalized m-gons: connected bipartite
// graphs of diameter m >= 2 and girth 2m with every degree at least 3. For
// m = 3 this is a projective-plane incidence graph and for m = 2 a complete
// bipartite graph; the recognizer annotates those refinements.

#include <optional>
#include <string>
#include <utility>

#include "starpoly/graph.hpp"

namespace starpoly {

enum class PolygonKind { GeneralizedMGon, ProjectivePlane, CompleteBipartite, NotPolygon };

// First violated criterion, checked in this order.
enum class PolygonFailure { None, Disconnected, NotBipartite, MinDegree, Girth, Diameter };

const char* to_string(PolygonKind k);
const char* to_string(PolygonFailure f);

struct PolygonVerdict {
  PolygonKind kind = PolygonKind::NotPolygon;
  int m = 0;  // set when recognized
  std::optional<std::pair<int, int>> part_sizes;  // (smaller, larger); set when bipartite
  std::optional<int> plane_order;                 // set when kind == ProjectivePlane
  PolygonFailure failure = PolygonFailure::None;  // set when kind == NotPolygon

  bool is_polygon() const { return kind != PolygonKind::NotPolygon; }
  std::string describe() const;
};

// Checks, in order: connected, bipartite, min degree >= 3, girth == 2 *
// diameter, diameter >= 2. On success m is the diameter; no finite graph can
// pass with m outside {2,3,4,6,8}, so that is asserted (std::logic_error).
PolygonVerdict recognize_generalized_polygon(const Multigraph& g);

// q - 1 iff g is simple, connected, q-regular with q >= 3, bipartite with
// both parts of size q^2 - q + 1, and every same-part vertex pair has exactly
// one common neighbour. Never throws; empty optional otherwise.
std::optional<int> projective_plane_order(const Multigraph& g);

// Part sizes (smaller, larger) iff g is connected, has no same-part edges,
// and every cross-part pair is adjacent exactly once. Never throws.
std::optional<std::pair<int, int>> is_complete_bipartite(const Multigraph& g);

}  // namespace starpoly
