#include "starpoly/star_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace starpoly {

std::string StarGraph::vertex_name(int v) const {
  if (v < n) return "x" + std::to_string(v);
  return "x" + std::to_string(v - n) + "_inv";
}

namespace {

std::vector<Letter> inverse_letters(std::span<const Letter> w) {
  std::vector<Letter> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w[w.size() - 1 - i];
    out[i] = Letter{l.index, -l.sign};
  }
  return out;
}

bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Letter x, Letter y) { return x < y; });
}

std::vector<Letter> least_rotation(const std::vector<Letter>& w) {
  std::vector<Letter> best = w;
  std::vector<Letter> cur(w.size());
  for (size_t r = 1; r < w.size(); ++r) {
    for (size_t i = 0; i < w.size(); ++i) cur[i] = w[(i + r) % w.size()];
    if (letters_less(cur, best)) best = cur;
  }
  return best;
}

// Canonical key of the free-conjugacy class of {r, r^-1}: the least rotation
// over both words. Relators with equal keys yield identical star edges.
std::vector<Letter> conjugacy_key(const std::vector<Letter>& root) {
  std::vector<Letter> a = least_rotation(root);
  std::vector<Letter> b = least_rotation(inverse_letters(root));
  return letters_less(b, a) ? b : a;
}

int letter_vertex(Letter l, int n) { return l.sign > 0 ? l.index : n + l.index; }

}  // namespace

StarGraph build_star_graph(int n, std::span<const Word> relators) {
  if (n < 1) throw std::invalid_argument("star graph needs rank >= 1");

  struct KeyLess {
    bool operator()(const std::vector<Letter>& a, const std::vector<Letter>& b) const {
      return letters_less(a, b);
    }
  };
  std::set<std::vector<Letter>, KeyLess> seen;
  std::vector<std::pair<int, int>> pairs;

  for (const Word& w : relators) {
    if (w.rank() != n) throw std::invalid_argument("relator rank does not match n");
    if (w.empty()) throw std::invalid_argument("empty relator");
    if (!detail::is_cyclically_reduced(w.letters(), n))
      throw std::invalid_argument("relator not cyclically reduced: " + w.str());

    const int power = detail::root_power(w.letters());
    const auto root_span = w.letters().subspan(0, w.letters().size() / static_cast<size_t>(power));
    std::vector<Letter> root(root_span.begin(), root_span.end());
    if (!seen.insert(conjugacy_key(root)).second) continue;

    const size_t L = root.size();
    for (size_t t = 0; t < L; ++t) {
      const Letter cur = root[t];
      const Letter next = root[(t + 1) % L];
      pairs.emplace_back(letter_vertex(cur, n), letter_vertex(Letter{next.index, -next.sign}, n));
    }
  }

  StarGraph g;
  g.n = n;
  g.provenance = StarProvenance::Generic;
  g.graph = Multigraph::from_pairs(2 * n, pairs);
  return g;
}

StarGraph build_star_graph(const CyclicPresentation& p) {
  std::vector<Word> relators;
  relators.reserve(static_cast<size_t>(p.n));
  for (int s = 0; s < p.n; ++s) relators.push_back(shift(p.word, s));
  return build_star_graph(p.n, relators);
}

std::pair<StarGraph, ComponentPrediction> predicted_star_graph(const CyclicPresentation& p) {
  if (p.redundant)
    throw std::invalid_argument("component prediction requires a non-redundant presentation");
  if (p.proper_power())
    throw std::invalid_argument("component prediction requires the word not be a proper power");

  const int n = p.n;
  const SubscriptMultisets ms = subscript_multisets(p.word);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * static_cast<size_t>(p.word.length()));
  for (int a : ms.A)
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + a) % n);
  for (int b : ms.B)
    for (int i = 0; i < n; ++i) pairs.emplace_back(n + i, n + (i + b) % n);
  for (int q : ms.Q)
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + (i + q) % n);

  StarGraph g;
  g.n = n;
  g.provenance = StarProvenance::Predicted;
  g.graph = Multigraph::from_pairs(2 * n, pairs);

  ComponentPrediction pred;
  auto residue_class = [n](int r, int step) {
    std::vector<int> out;
    for (int i = r % step; i < n; i += step) out.push_back(i);
    return out;
  };

  if (!ms.q0.has_value()) {
    // Alternating word: positive and negative sides never meet. Each side
    // splits into circulants.
    auto circ_name = [n](int dd, const std::vector<int>& entries) {
      std::ostringstream os;
      os << "circ_" << (n / dd) << "({";
      for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << entries[i] / dd;
      }
      os << "})";
      return os.str();
    };
    pred.count = ms.dA + ms.dB;
    for (int j = 0; j < ms.dA; ++j)
      pred.components.push_back({residue_class(j, ms.dA), {}, circ_name(ms.dA, ms.A)});
    for (int j = 0; j < ms.dB; ++j)
      pred.components.push_back({{}, residue_class(j, ms.dB), circ_name(ms.dB, ms.B)});
  } else {
    const int d = *ms.d;
    const int q0 = *ms.q0;
    pred.count = d;
    for (int j = 0; j < d; ++j) {
      PredictedComponent c;
      c.positive = residue_class(j, d);
      c.negative = residue_class((j + q0) % d, d);
      c.isomorphism_type =
          j == 0 ? "base component" : "shift of component 0 by " + std::to_string(j);
      pred.components.push_back(std::move(c));
    }
  }
  return {std::move(g), std::move(pred)};
}

bool shift_is_automorphism(const StarGraph& g) {
  const int n = g.n;
  auto shifted = [n](int v) { return v < n ? (v + 1) % n : n + (v - n + 1) % n; };
  for (const Edge& e : g.graph.edges())
    if (g.graph.multiplicity(shifted(e.u), shifted(e.v)) != e.mult) return false;
  return true;
}

bool components_isomorphic(const StarGraph& g) {
  const GraphProfile prof = graph_profile(g.graph);
  if (prof.component_count <= 1) return true;

  // Shift powers permute the components when the shift is an automorphism;
  // components in one orbit are isomorphic for free.
  std::vector<int> orbit_of(static_cast<size_t>(prof.component_count), -1);
  if (shift_is_automorphism(g)) {
    const int n = g.n;
    int next_orbit = 0;
    for (int c = 0; c < prof.component_count; ++c) {
      if (orbit_of[static_cast<size_t>(c)] != -1) continue;
      const int orbit = next_orbit++;
      std::vector<int> image = prof.components[static_cast<size_t>(c)];
      for (int s = 0; s < n; ++s) {
        const int hit = prof.component_of[static_cast<size_t>(image.front())];
        if (orbit_of[static_cast<size_t>(hit)] == -1) orbit_of[static_cast<size_t>(hit)] = orbit;
        for (int& v : image) v = v < n ? (v + 1) % n : n + (v - n + 1) % n;
      }
    }
  } else {
    std::iota(orbit_of.begin(), orbit_of.end(), 0);
  }

  std::vector<int> reps;
  {
    std::set<int> seen_orbits;
    for (int c = 0; c < prof.component_count; ++c)
      if (seen_orbits.insert(orbit_of[static_cast<size_t>(c)]).second) reps.push_back(c);
  }
  if (reps.size() <= 1) return true;

  const Multigraph first = induced_subgraph(g.graph, prof.components[static_cast<size_t>(reps[0])]);
  for (size_t k = 1; k < reps.size(); ++k) {
    const Multigraph other =
        induced_subgraph(g.graph, prof.components[static_cast<size_t>(reps[k])]);
    if (!graphs_isomorphic(first, other)) return false;
  }
  return true;
}

std::string to_dot(const StarGraph& g) {
  const GraphProfile prof = graph_profile(g.graph);
  std::ostringstream os;
  os << "graph star_graph {\n";
  for (int v = 0; v < g.graph.vertex_count(); ++v)
    os << "  \"" << g.vertex_name(v) << "\" [component=" << prof.component_of[static_cast<size_t>(v)]
       << "];\n";
  for (const Edge& e : g.graph.edges())
    for (int m = 0; m < e.mult; ++m)
      os << "  \"" << g.vertex_name(e.u) << "\" -- \"" << g.vertex_name(e.v) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace starpoly
