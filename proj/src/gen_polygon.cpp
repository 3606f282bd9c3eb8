#include "starpoly/gen_polygon.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace starpoly {

const char* to_string(PolygonKind k) {
  switch (k) {
    case PolygonKind::GeneralizedMGon: return "generalized m-gon";
    case PolygonKind::ProjectivePlane: return "projective plane";
    case PolygonKind::CompleteBipartite: return "complete bipartite";
    case PolygonKind::NotPolygon: return "not a polygon";
  }
  return "?";
}

const char* to_string(PolygonFailure f) {
  switch (f) {
    case PolygonFailure::None: return "none";
    case PolygonFailure::Disconnected: return "disconnected";
    case PolygonFailure::NotBipartite: return "not bipartite";
    case PolygonFailure::MinDegree: return "minimum degree below 3";
    case PolygonFailure::Girth: return "girth does not equal twice the diameter";
    case PolygonFailure::Diameter: return "diameter below 2";
  }
  return "?";
}

std::string PolygonVerdict::describe() const {
  std::ostringstream os;
  switch (kind) {
    case PolygonKind::NotPolygon:
      os << "not a generalized polygon (" << to_string(failure) << ")";
      return os.str();
    case PolygonKind::ProjectivePlane:
      os << "projective plane of order " << *plane_order << " (generalized 3-gon)";
      break;
    case PolygonKind::CompleteBipartite:
      os << "complete bipartite K_{" << part_sizes->first << "," << part_sizes->second
         << "} (generalized 2-gon)";
      return os.str();
    case PolygonKind::GeneralizedMGon:
      os << "generalized " << m << "-gon";
      break;
  }
  os << ", parts " << part_sizes->first << "+" << part_sizes->second;
  return os.str();
}

namespace {

// Proper 2-coloring (0/1 per vertex) or empty if none; loops always fail.
std::optional<std::vector<int>> two_coloring(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) return std::nullopt;
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::queue<int> bfs;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    bfs.push(s);
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
          bfs.push(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::pair<int, int> part_sizes_of(const std::vector<int>& color) {
  int zero = 0;
  for (int c : color) zero += (c == 0);
  const int one = static_cast<int>(color.size()) - zero;
  return {std::min(zero, one), std::max(zero, one)};
}

}  // namespace

PolygonVerdict recognize_generalized_polygon(const Multigraph& g) {
  PolygonVerdict v;
  const GraphProfile prof = graph_profile(g);

  if (prof.component_count != 1) {
    v.failure = PolygonFailure::Disconnected;
    return v;
  }
  const auto coloring = two_coloring(g);
  if (!coloring) {
    v.failure = PolygonFailure::NotBipartite;
    return v;
  }
  v.part_sizes = part_sizes_of(*coloring);
  if (prof.min_degree < 3) {
    v.failure = PolygonFailure::MinDegree;
    return v;
  }
  // Connected with min degree 3 forces a cycle, so girth and diameter are set.
  if (*prof.girth != 2 * *prof.diameter) {
    v.failure = PolygonFailure::Girth;
    return v;
  }
  if (*prof.diameter < 2) {
    v.failure = PolygonFailure::Diameter;
    return v;
  }

  v.m = *prof.diameter;
  if (v.m != 2 && v.m != 3 && v.m != 4 && v.m != 6 && v.m != 8)
    throw std::logic_error("thick generalized " + std::to_string(v.m) +
                           "-gon recognized; no finite graph can do this");

  v.kind = PolygonKind::GeneralizedMGon;
  v.failure = PolygonFailure::None;
  if (v.m == 3) {
    if (auto order = projective_plane_order(g)) {
      v.kind = PolygonKind::ProjectivePlane;
      v.plane_order = order;
    }
  } else if (v.m == 2) {
    if (is_complete_bipartite(g)) v.kind = PolygonKind::CompleteBipartite;
  }
  return v;
}

std::optional<int> projective_plane_order(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0 || g.has_loop() || g.has_parallel_edge()) return std::nullopt;
  const auto coloring = two_coloring(g);
  if (!coloring) return std::nullopt;

  const std::vector<int> deg = g.degrees();
  const int q = deg.empty() ? 0 : deg[0];
  if (q < 3) return std::nullopt;
  for (int d : deg)
    if (d != q) return std::nullopt;

  const auto [small, large] = part_sizes_of(*coloring);
  if (small != large || small != q * q - q + 1) return std::nullopt;

  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  if (graph_components(g).size() != 1) return std::nullopt;

  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if ((*coloring)[static_cast<size_t>(u)] != (*coloring)[static_cast<size_t>(w)]) continue;
      const auto& a = adj[static_cast<size_t>(u)];
      const auto& b = adj[static_cast<size_t>(w)];
      int common = 0;
      for (size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++common; ++i; ++j; }
      }
      if (common != 1) return std::nullopt;
    }
  return q - 1;
}

std::optional<std::pair<int, int>> is_complete_bipartite(const Multigraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const auto coloring = two_coloring(g);
  if (!coloring) return std::nullopt;
  if (graph_components(g).size() != 1) return std::nullopt;

  for (const Edge& e : g.edges())
    if (e.mult != 1) return std::nullopt;
  const auto [small, large] = part_sizes_of(*coloring);
  if (g.edge_count() != small * large) return std::nullopt;
  return std::pair{small, large};
}

}  // namespace starpoly
