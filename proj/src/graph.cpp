#include "starpoly/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace starpoly {

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void Multigraph::add_edge(int u, int v, int multiplicity) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("edge endpoint out of range");
  if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be positive");
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::pair{e.u, e.v} < key;
                             });
  if (it != edges_.end() && it->u == u && it->v == v)
    it->mult += multiplicity;
  else
    edges_.insert(it, Edge{u, v, multiplicity});
}

Multigraph Multigraph::from_pairs(int vertex_count,
                                  std::span<const std::pair<int, int>> pairs) {
  Multigraph g(vertex_count);
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    g.edges_.push_back(Edge{sorted[i].first, sorted[i].second, static_cast<int>(j - i)});
    i = j;
  }
  return g;
}

int Multigraph::edge_count() const {
  int total = 0;
  for (const Edge& e : edges_) total += e.mult;
  return total;
}

int Multigraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<int, int>& key) {
                               return std::pair{e.u, e.v} < key;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->mult;
  return 0;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    deg[static_cast<size_t>(e.u)] += e.mult;
    deg[static_cast<size_t>(e.v)] += e.mult;  // loops count twice by falling through
  }
  return deg;
}

bool Multigraph::has_loop() const {
  for (const Edge& e : edges_)
    if (e.u == e.v) return true;
  return false;
}

bool Multigraph::has_parallel_edge() const {
  for (const Edge& e : edges_)
    if (e.mult >= 2 && e.u != e.v) return true;
  return false;
}

namespace {

// Compressed adjacency over coalesced edges; loops are skipped (the callers
// handle them up front).
struct Adjacency {
  std::vector<int> offset;             // size n+1
  std::vector<std::pair<int, int>> to; // (neighbor, edge id)

  explicit Adjacency(const Multigraph& g) {
    const int n = g.vertex_count();
    offset.assign(static_cast<size_t>(n) + 1, 0);
    const auto& edges = g.edges();
    for (const Edge& e : edges) {
      if (e.u == e.v) continue;
      ++offset[static_cast<size_t>(e.u) + 1];
      ++offset[static_cast<size_t>(e.v) + 1];
    }
    for (int v = 0; v < n; ++v) offset[static_cast<size_t>(v) + 1] += offset[static_cast<size_t>(v)];
    to.resize(static_cast<size_t>(offset[static_cast<size_t>(n)]));
    std::vector<int> cursor(offset.begin(), offset.end() - 1);
    for (size_t id = 0; id < edges.size(); ++id) {
      const Edge& e = edges[id];
      if (e.u == e.v) continue;
      to[static_cast<size_t>(cursor[static_cast<size_t>(e.u)]++)] = {e.v, static_cast<int>(id)};
      to[static_cast<size_t>(cursor[static_cast<size_t>(e.v)]++)] = {e.u, static_cast<int>(id)};
    }
  }

  std::span<const std::pair<int, int>> at(int v) const {
    return std::span(to).subspan(static_cast<size_t>(offset[static_cast<size_t>(v)]),
                                 static_cast<size_t>(offset[static_cast<size_t>(v) + 1] -
                                                     offset[static_cast<size_t>(v)]));
  }
};

constexpr int kUnset = -1;

// Shortest cycle of a loop-free simple graph; min over roots of the classic
// BFS bound is exact for the roots lying on a minimal cycle.
std::optional<int> simple_girth(const Multigraph& g, const Adjacency& adj) {
  const int n = g.vertex_count();
  int best = INT32_MAX;
  std::vector<int> dist(static_cast<size_t>(n)), parent_edge(static_cast<size_t>(n));
  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnset);
    std::fill(parent_edge.begin(), parent_edge.end(), kUnset);
    queue.clear();
    dist[static_cast<size_t>(root)] = 0;
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (2 * dist[static_cast<size_t>(u)] >= best) break;
      for (auto [v, e] : adj.at(u)) {
        if (e == parent_edge[static_cast<size_t>(u)]) continue;
        if (dist[static_cast<size_t>(v)] == kUnset) {
          dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
          parent_edge[static_cast<size_t>(v)] = e;
          queue.push_back(v);
        } else {
          best = std::min(best, dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(v)] + 1);
        }
      }
    }
  }
  if (best == INT32_MAX) return std::nullopt;
  return best;
}

}  // namespace

GraphProfile graph_profile(const Multigraph& g) {
  GraphProfile out;
  const int n = g.vertex_count();
  out.vertex_count = n;
  out.edge_count = g.edge_count();

  std::vector<int> deg = g.degrees();
  out.min_degree = n ? *std::min_element(deg.begin(), deg.end()) : 0;
  out.max_degree = n ? *std::max_element(deg.begin(), deg.end()) : 0;
  if (n && out.min_degree == out.max_degree) out.regular_degree = out.min_degree;

  Adjacency adj(g);

  // Components and 2-coloring in one sweep.
  out.component_of.assign(static_cast<size_t>(n), kUnset);
  std::vector<int> color(static_cast<size_t>(n), kUnset);
  out.bipartite = !g.has_loop();
  std::vector<int> queue;
  for (int start = 0; start < n; ++start) {
    if (out.component_of[static_cast<size_t>(start)] != kUnset) continue;
    int id = out.component_count++;
    out.components.emplace_back();
    queue.clear();
    queue.push_back(start);
    out.component_of[static_cast<size_t>(start)] = id;
    color[static_cast<size_t>(start)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      out.components.back().push_back(u);
      for (auto [v, e] : adj.at(u)) {
        (void)e;
        if (out.component_of[static_cast<size_t>(v)] == kUnset) {
          out.component_of[static_cast<size_t>(v)] = id;
          color[static_cast<size_t>(v)] = color[static_cast<size_t>(u)] ^ 1;
          queue.push_back(v);
        } else if (color[static_cast<size_t>(v)] == color[static_cast<size_t>(u)]) {
          out.bipartite = false;
        }
      }
    }
    std::sort(out.components.back().begin(), out.components.back().end());
  }

  if (g.has_loop())
    out.girth = 1;
  else if (g.has_parallel_edge())
    out.girth = 2;
  else
    out.girth = simple_girth(g, adj);

  if (n > 0 && out.component_count == 1) {
    int diameter = 0;
    std::vector<int> dist(static_cast<size_t>(n));
    for (int root = 0; root < n; ++root) {
      std::fill(dist.begin(), dist.end(), kUnset);
      queue.clear();
      queue.push_back(root);
      dist[static_cast<size_t>(root)] = 0;
      for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        diameter = std::max(diameter, dist[static_cast<size_t>(u)]);
        for (auto [v, e] : adj.at(u)) {
          (void)e;
          if (dist[static_cast<size_t>(v)] == kUnset) {
            dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
            queue.push_back(v);
          }
        }
      }
    }
    out.diameter = diameter;
  }
  return out;
}

std::vector<std::vector<int>> graph_components(const Multigraph& g) {
  return graph_profile(g).components;
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const int> vertices) {
  std::vector<int> relabel(static_cast<size_t>(g.vertex_count()), kUnset);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (relabel[static_cast<size_t>(v)] != kUnset)
      throw std::invalid_argument("duplicate vertex in induced_subgraph");
    relabel[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  Multigraph out(static_cast<int>(vertices.size()));
  for (const Edge& e : g.edges()) {
    int u = relabel[static_cast<size_t>(e.u)], v = relabel[static_cast<size_t>(e.v)];
    if (u != kUnset && v != kUnset) out.add_edge(u, v, e.mult);
  }
  return out;
}

Multigraph circulant(int n, std::span<const int> jumps) {
  if (n < 1) throw std::invalid_argument("circulant needs at least one vertex");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(jumps.size() * static_cast<size_t>(n));
  for (int j : jumps) {
    int r = j % n;
    if (r < 0) r += n;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + r) % n);
  }
  return Multigraph::from_pairs(n, pairs);
}

namespace {

// Iterated neighborhood refinement; returns stable vertex colors, or nullopt
// if the two graphs' color histograms ever disagree.
std::optional<std::pair<std::vector<int>, std::vector<int>>> refine_colors(
    const Multigraph& a, const Multigraph& b) {
  const int n = a.vertex_count();
  std::vector<int> ca(static_cast<size_t>(n), 0), cb(static_cast<size_t>(n), 0);
  int classes = 1;
  for (int round = 0; round <= n; ++round) {
    // signature: own color, loop multiplicity, sorted (neighbor color, mult).
    using Sig = std::tuple<int, int, std::vector<std::pair<int, int>>>;
    auto signature = [](const Multigraph& g, const std::vector<int>& c, int v) {
      Sig s{c[static_cast<size_t>(v)], 0, {}};
      for (const Edge& e : g.edges()) {
        if (e.u == v && e.v == v) {
          std::get<1>(s) += e.mult;
        } else if (e.u == v) {
          std::get<2>(s).emplace_back(c[static_cast<size_t>(e.v)], e.mult);
        } else if (e.v == v) {
          std::get<2>(s).emplace_back(c[static_cast<size_t>(e.u)], e.mult);
        }
      }
      std::sort(std::get<2>(s).begin(), std::get<2>(s).end());
      return s;
    };
    std::map<Sig, int> ids;
    std::vector<int> na(static_cast<size_t>(n)), nb(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto [it, unused] = ids.try_emplace(signature(a, ca, v), static_cast<int>(ids.size()));
      (void)unused;
      na[static_cast<size_t>(v)] = it->second;
    }
    std::vector<int> hist_a(ids.size(), 0), hist_b(ids.size(), 0);
    for (int v = 0; v < n; ++v) ++hist_a[static_cast<size_t>(na[static_cast<size_t>(v)])];
    for (int v = 0; v < n; ++v) {
      auto it = ids.find(signature(b, cb, v));
      if (it == ids.end()) return std::nullopt;
      nb[static_cast<size_t>(v)] = it->second;
      ++hist_b[static_cast<size_t>(it->second)];
    }
    if (hist_a != hist_b) return std::nullopt;
    int new_classes = static_cast<int>(ids.size());
    ca.swap(na);
    cb.swap(nb);
    if (new_classes == classes) break;
    classes = new_classes;
  }
  return std::pair{ca, cb};
}

}  // namespace

bool graphs_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  if (n > kIsomorphismVertexLimit)
    throw IsomorphismTooLarge("component exceeds the isomorphism fallback bound");
  if (n == 0) return true;
  {
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
  }
  auto refined = refine_colors(a, b);
  if (!refined) return false;
  const auto& [ca, cb] = *refined;

  // Dense multiplicity matrices make the backtracking consistency check O(1).
  std::vector<int> ma(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  std::vector<int> mb(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (const Edge& e : a.edges())
    ma[static_cast<size_t>(e.u) * static_cast<size_t>(n) + static_cast<size_t>(e.v)] =
        ma[static_cast<size_t>(e.v) * static_cast<size_t>(n) + static_cast<size_t>(e.u)] = e.mult;
  for (const Edge& e : b.edges())
    mb[static_cast<size_t>(e.u) * static_cast<size_t>(n) + static_cast<size_t>(e.v)] =
        mb[static_cast<size_t>(e.v) * static_cast<size_t>(n) + static_cast<size_t>(e.u)] = e.mult;

  // Mapping order: breadth-first so each vertex after the first in its
  // component touches an already-mapped neighbor.
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<size_t>(start)]) continue;
      size_t head = order.size();
      order.push_back(start);
      seen[static_cast<size_t>(start)] = 1;
      while (head < order.size()) {
        int u = order[head++];
        for (int v = 0; v < n; ++v) {
          if (!seen[static_cast<size_t>(v)] &&
              ma[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = 1;
            order.push_back(v);
          }
        }
      }
    }
  }

  std::vector<int> image(static_cast<size_t>(n), kUnset);
  std::vector<char> used(static_cast<size_t>(n), 0);

  auto consistent = [&](int av, int bw, size_t depth) {
    if (ca[static_cast<size_t>(av)] != cb[static_cast<size_t>(bw)]) return false;
    if (ma[static_cast<size_t>(av) * static_cast<size_t>(n) + static_cast<size_t>(av)] !=
        mb[static_cast<size_t>(bw) * static_cast<size_t>(n) + static_cast<size_t>(bw)])
      return false;
    for (size_t i = 0; i < depth; ++i) {
      int au = order[i];
      if (ma[static_cast<size_t>(av) * static_cast<size_t>(n) + static_cast<size_t>(au)] !=
          mb[static_cast<size_t>(bw) * static_cast<size_t>(n) +
             static_cast<size_t>(image[static_cast<size_t>(au)])])
        return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, size_t depth) -> bool {
    if (depth == order.size()) return true;
    int av = order[depth];
    for (int bw = 0; bw < n; ++bw) {
      if (used[static_cast<size_t>(bw)] || !consistent(av, bw, depth)) continue;
      image[static_cast<size_t>(av)] = bw;
      used[static_cast<size_t>(bw)] = 1;
      if (self(self, depth + 1)) return true;
      used[static_cast<size_t>(bw)] = 0;
      image[static_cast<size_t>(av)] = kUnset;
    }
    return false;
  };
  return recurse(recurse, 0);
}

}  // namespace starpoly
