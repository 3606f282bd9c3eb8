#include "starpoly/classifier.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "starpoly/difference_sets.hpp"
#include "starpoly/graph.hpp"

namespace starpoly {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

SpecialityReport base_report(const CyclicPresentation& p, const char* method) {
  SpecialityReport r;
  r.k = p.word.length();
  r.method = method;
  r.irreducible = p.irreducible;
  r.redundant = p.redundant;
  r.proper_power = p.proper_power();
  r.sign = sign_class(p.word);
  return r;
}

void require_hypothesis(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("hypothesis not met: ") + what);
}

SpecialityReport from_eval(SpecialityReport r, const detail::TheoremEval& ev) {
  if (ev.special) {
    r.special = true;
    r.m = ev.m;
    r.nu = ev.nu;
  } else {
    r.reason = ev.fail;
  }
  return r;
}

void check_multiset_total(const SubscriptMultisets& ms, int k, const char* who) {
  if (static_cast<int>(ms.A.size() + ms.B.size() + ms.Q.size()) != k)
    throw std::invalid_argument(std::string(who) + ": k does not match the multiset sizes");
}

}  // namespace

std::string SpecialityReport::verdict_string() const {
  if (!special) return "NOT_SPECIAL";
  return "SPECIAL(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(nu) + ")";
}

namespace detail {

SignClass sign_pattern_class(unsigned mask, int k) {
  const unsigned all = (k >= 32) ? ~0u : ((1u << k) - 1u);
  mask &= all;
  if (mask == 0u) return SignClass::Positive;
  if (mask == all) return SignClass::Negative;
  if (k % 2 == 0) {
    unsigned odd = 0;
    for (int t = 1; t < k; t += 2) odd |= 1u << t;
    if (mask == odd || mask == (all & ~odd)) return SignClass::Alternating;
  }
  return SignClass::Mixed;
}

TheoremEval eval_3k(const SubscriptMultisets& ms, int k) {
  check_multiset_total(ms, k, "eval_3k");
  TheoremEval ev;
  ev.m = 3;
  const int n = ms.n;
  const int N = k * k - k + 1;
  if (n % N != 0) {
    ev.fail = "n is not a multiple of k^2 - k + 1";
    return ev;
  }
  const int nu = n / N;
  if (k % nu != 0) {
    ev.fail = "the component count n / (k^2 - k + 1) does not divide k";
    return ev;
  }
  const int q0 = ms.q0.value();
  for (int q : ms.Q) {
    if ((q - q0) % nu != 0) {
      ev.fail = "q values are not all congruent mod the component count";
      return ev;
    }
  }
  if (!is_perfect_difference_set(ms.Q, k)) {
    ev.fail = "q values do not reduce to a perfect difference set";
    return ev;
  }
  ev.special = true;
  ev.nu = nu;
  if (!ms.d || *ms.d != nu)
    throw std::logic_error("eval_3k: component count disagrees with the multiset gcd");
  return ev;
}

TheoremEval eval_2k_positive(const SubscriptMultisets& ms, int k) {
  check_multiset_total(ms, k, "eval_2k_positive");
  TheoremEval ev;
  ev.m = 2;
  const int n = ms.n;
  const auto& Q = ms.Q;
  if (k >= 5 && k % 2 == 1 && n == k) {
    for (int i = 0; i < k; ++i) {
      if (Q[static_cast<size_t>(i)] != i) {
        ev.fail = "Q is not the full residue set 0..n-1";
        return ev;
      }
    }
    ev.special = true;
    ev.nu = 1;
    if (!ms.d || *ms.d != 1)
      throw std::logic_error("eval_2k_positive: component count disagrees with the multiset gcd");
    return ev;
  }
  if (k >= 4 && k % 2 == 0 && n == 2 * k) {
    for (int i = 0; i < k; ++i) {
      if (Q[static_cast<size_t>(i)] != 2 * i + 1) {
        ev.fail = "Q is not the odd residue set 1,3,..,n-1";
        return ev;
      }
    }
    ev.special = true;
    ev.nu = 2;
    if (!ms.d || *ms.d != 2)
      throw std::logic_error("eval_2k_positive: component count disagrees with the multiset gcd");
    return ev;
  }
  ev.fail = "(n, k) fits neither the K_{n,n} shape (k >= 5 odd, n = k) nor the two-component shape (k >= 4 even, n = 2k)";
  return ev;
}

TheoremEval eval_2k_alternating(const SubscriptMultisets& ms, int k) {
  check_multiset_total(ms, k, "eval_2k_alternating");
  if (!ms.Q.empty() || static_cast<int>(ms.A.size()) != k / 2)
    throw std::invalid_argument("eval_2k_alternating: multisets are not those of an alternating word");
  TheoremEval ev;
  ev.m = 2;
  const int n = ms.n;
  if (n != 2 * k) {
    ev.fail = "n is not 2k";
    return ev;
  }
  auto side_ok = [n](const std::vector<int>& S) {
    for (size_t i = 0; i < S.size(); ++i) {
      if (S[i] % 2 == 0) return false;
      if (i > 0 && S[i] == S[i - 1]) return false;
    }
    for (int a : S) {
      if (std::binary_search(S.begin(), S.end(), n - a)) return false;
    }
    return true;
  };
  if (!side_ok(ms.A)) {
    ev.fail = "A is not k/2 distinct odd residues free of {a, n-a} pairs";
    return ev;
  }
  if (!side_ok(ms.B)) {
    ev.fail = "B is not k/2 distinct odd residues free of {a, n-a} pairs";
    return ev;
  }
  ev.special = true;
  ev.nu = 2;
  if (ms.dA != 1 || ms.dB != 1)
    throw std::logic_error("eval_2k_alternating: sides of a special graph must be single circulants");
  return ev;
}

TheoremEval eval_2k_mixed(const SubscriptMultisets& ms, int k) {
  check_multiset_total(ms, k, "eval_2k_mixed");
  if (ms.Q.empty() || ms.A.empty())
    throw std::invalid_argument("eval_2k_mixed: multisets are not those of a mixed word");
  TheoremEval ev;
  ev.m = 2;
  const int n = ms.n;
  if (k % 4 != 0 || n % k != 0) {
    ev.fail = "needs 4 | k and k | n";
    return ev;
  }
  const int nu = n / k;
  auto side_ok = [&](const std::vector<int>& S) {
    if (static_cast<int>(S.size()) != k / 4) return false;
    for (size_t i = 0; i < S.size(); ++i) {
      if (S[i] % nu != 0 || (S[i] / nu) % 2 == 0) return false;
      if (i > 0 && S[i] == S[i - 1]) return false;
    }
    for (int a : S) {
      if (std::binary_search(S.begin(), S.end(), n - a)) return false;
    }
    return true;
  };
  if (!side_ok(ms.A)) {
    ev.fail = "A is not k/4 distinct odd multiples of nu free of {a, n-a} pairs";
    return ev;
  }
  if (!side_ok(ms.B)) {
    ev.fail = "B is not k/4 distinct odd multiples of nu free of {a, n-a} pairs";
    return ev;
  }
  const auto& Q = ms.Q;
  for (size_t i = 1; i < Q.size(); ++i) {
    if (Q[i] == Q[i - 1]) {
      ev.fail = "Q has a repeated value";
      return ev;
    }
  }
  // k/2 distinct values all in one class mod 2 nu fill that class exactly,
  // since n / (2 nu) = k/2.
  const int c = Q[0] % (2 * nu);
  for (int q : Q) {
    if (q % (2 * nu) != c) {
      ev.fail = "Q is not contained in one congruence class mod 2 nu";
      return ev;
    }
  }
  if (std::gcd(c, nu) != 1) {
    ev.fail = "the Q congruence class shares a factor with nu";
    return ev;
  }
  ev.special = true;
  ev.nu = nu;
  if (!ms.d || *ms.d != nu)
    throw std::logic_error("eval_2k_mixed: component count disagrees with the multiset gcd");
  return ev;
}

}  // namespace detail

SpecialityReport check_3k_criteria(const CyclicPresentation& p) {
  SpecialityReport r = base_report(p, "theorem:positive_m3");
  require_hypothesis(r.sign == SignClass::Positive, "positive word");
  require_hypothesis(r.k >= 3, "length at least 3");
  require_hypothesis(!p.proper_power(), "not a proper power");
  require_hypothesis(p.irreducible, "irreducible");
  require_hypothesis(!p.redundant, "non-redundant");
  return from_eval(std::move(r), detail::eval_3k(subscript_multisets(p.word), r.k));
}

SpecialityReport check_2k_positive(const CyclicPresentation& p) {
  SpecialityReport r = base_report(p, "theorem:positive_m2");
  require_hypothesis(r.sign == SignClass::Positive, "positive word");
  require_hypothesis(!p.proper_power(), "not a proper power");
  require_hypothesis(p.irreducible, "irreducible");
  require_hypothesis(!p.redundant, "non-redundant");
  return from_eval(std::move(r), detail::eval_2k_positive(subscript_multisets(p.word), r.k));
}

SpecialityReport check_2k_alternating(const CyclicPresentation& p) {
  SpecialityReport r = base_report(p, "theorem:alternating_m2");
  require_hypothesis(r.sign == SignClass::Alternating, "alternating word");
  require_hypothesis(r.k >= 4, "length at least 4");
  require_hypothesis(p.irreducible, "irreducible");
  require_hypothesis(!p.redundant, "non-redundant");
  return from_eval(std::move(r), detail::eval_2k_alternating(subscript_multisets(p.word), r.k));
}

SpecialityReport check_2k_mixed(const CyclicPresentation& p) {
  SpecialityReport r = base_report(p, "theorem:mixed_m2");
  require_hypothesis(r.sign == SignClass::Mixed, "mixed word");
  require_hypothesis(!p.proper_power(), "not a proper power");
  require_hypothesis(p.irreducible, "irreducible");
  require_hypothesis(!p.redundant, "non-redundant");
  return from_eval(std::move(r), detail::eval_2k_mixed(subscript_multisets(p.word), r.k));
}

std::optional<SpecialityReport> classify_by_theorems(const CyclicPresentation& p) {
  if (p.n < 3 || p.word.length() < 3) return std::nullopt;
  if (!p.irreducible || p.redundant) return std::nullopt;
  const SignClass cls = sign_class(p.word);
  if (cls != SignClass::Alternating && p.proper_power()) return std::nullopt;
  switch (cls) {
    case SignClass::Positive:
    case SignClass::Negative: {
      // Inversion fixes the star graph, so the positive criteria transfer.
      const CyclicPresentation q =
          cls == SignClass::Negative ? presentation_flags(invert(p.word)) : p;
      SpecialityReport m3 = check_3k_criteria(q);
      if (m3.special) {
        m3.sign = cls;
        return m3;
      }
      SpecialityReport m2 = check_2k_positive(q);
      m2.sign = cls;
      if (m2.special) return m2;
      // Special presentations only occur with m = 2, or with m = 3 and a
      // positive or negative word, so missing both criteria settles it.
      m2.method = "theorem:positive_m3+positive_m2";
      m2.reason = "m=3: " + m3.reason + "; m=2: " + m2.reason;
      return m2;
    }
    case SignClass::Alternating:
      if (p.word.length() < 4) return std::nullopt;
      return check_2k_alternating(p);
    case SignClass::Mixed:
      return check_2k_mixed(p);
  }
  return std::nullopt;
}

SpecialityReport check_special_direct(const CyclicPresentation& p) {
  SpecialityReport r = base_report(p, "direct");
  if (p.n < 3) {
    r.reason = "fewer than 3 generators";
    return r;
  }
  const StarGraph star = build_star_graph(p);
  const GraphProfile prof = graph_profile(star.graph);
  r.component_verdicts.reserve(prof.components.size());
  for (const auto& comp : prof.components)
    r.component_verdicts.push_back(recognize_generalized_polygon(induced_subgraph(star.graph, comp)));
  for (size_t i = 0; i < r.component_verdicts.size(); ++i) {
    if (!r.component_verdicts[i].is_polygon()) {
      r.reason = "component " + std::to_string(i) + ": " + r.component_verdicts[i].describe();
      return r;
    }
  }
  const int m = r.component_verdicts.front().m;
  for (const auto& v : r.component_verdicts) {
    if (v.m != m) {
      r.reason = "components are generalized m-gons for different m";
      return r;
    }
  }
  if (m == 2 && r.k < 4) {
    r.reason = "diameter-2 components but relator length below 4";
    return r;
  }
  if (!components_isomorphic(star)) {
    r.reason = "components are not pairwise isomorphic";
    return r;
  }
  r.special = true;
  r.m = m;
  r.nu = prof.component_count;
  return r;
}

namespace {

// Shift-invariant descriptor of the star-graph edge cut out by the length-2
// cyclic subword at position t: endpoint signs plus the subscript offset,
// minimized over the two edge orientations.
std::tuple<int, int, int> edge_descriptor(std::span<const Letter> w, int n, int t) {
  const int L = static_cast<int>(w.size());
  const Letter& c = w[static_cast<size_t>(t)];
  const Letter& d = w[static_cast<size_t>((t + 1) % L)];
  const int s1 = c.sign, s2 = -d.sign;
  const int fwd = mod(d.index - c.index, n);
  return std::min(std::tuple{s1, s2, fwd}, std::tuple{s2, s1, mod(-fwd, n)});
}

bool cyclically_disjoint(int t, int u, int L) {
  const int d = mod(u - t, L);
  return d >= 2 && d <= L - 2;
}

bool has_repeated_edge_pattern(std::span<const Letter> w, int n) {
  const int L = static_cast<int>(w.size());
  if (L < 4) return false;
  for (int t = 0; t < L; ++t) {
    for (int u = t + 1; u < L; ++u) {
      if (!cyclically_disjoint(t, u, L)) continue;
      if (edge_descriptor(w, n, t) == edge_descriptor(w, n, u)) return true;
    }
  }
  return false;
}

bool has_two_disjoint_descents(std::span<const Letter> w) {
  const int L = static_cast<int>(w.size());
  std::vector<int> descents;
  for (int t = 0; t < L; ++t) {
    if (w[static_cast<size_t>(t)].sign > 0 && w[static_cast<size_t>((t + 1) % L)].sign < 0)
      descents.push_back(t);
  }
  for (size_t i = 0; i < descents.size(); ++i) {
    for (size_t j = i + 1; j < descents.size(); ++j) {
      if (cyclically_disjoint(descents[i], descents[j], L)) return true;
    }
  }
  return false;
}

bool cyclic_sign_match(std::span<const Letter> w, std::initializer_list<int> pat) {
  const int L = static_cast<int>(w.size());
  if (L != static_cast<int>(pat.size())) return false;
  for (int r = 0; r < L; ++r) {
    bool ok = true;
    int t = 0;
    for (int s : pat) {
      if (w[static_cast<size_t>((r + t++) % L)].sign != s) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

int case_bound(char c) {
  switch (c) {
    case 'a': return 2;
    case 'f': return 4;
    default: return 6;
  }
}

}  // namespace

GirthAudit girth_bound_audit(const CyclicPresentation& p) {
  if (p.redundant) throw std::invalid_argument("girth_bound_audit: redundant presentation");
  if (p.proper_power()) throw std::invalid_argument("girth_bound_audit: proper power");
  if (p.word.length() < 3) throw std::invalid_argument("girth_bound_audit: length below 3");

  GirthAudit a;
  a.sign = sign_class(p.word);
  a.length = p.word.length();
  a.girth = graph_profile(build_star_graph(p).graph).girth;

  const Word inv = invert(p.word);
  const std::span<const Letter> w = p.word.letters();
  const std::span<const Letter> v = inv.letters();
  const int n = p.n;

  if (has_repeated_edge_pattern(w, n) || has_repeated_edge_pattern(v, n)) a.fired.push_back('a');
  if (a.length == 3 && (cyclic_sign_match(w, {1, 1, 1}) || cyclic_sign_match(v, {1, 1, 1})))
    a.fired.push_back('b');
  if (a.length == 4) {
    if (cyclic_sign_match(w, {1, 1, -1, -1}) || cyclic_sign_match(v, {1, 1, -1, -1})) a.fired.push_back('c');
    if (cyclic_sign_match(w, {1, 1, 1, 1}) || cyclic_sign_match(v, {1, 1, 1, 1})) a.fired.push_back('d');
    if (cyclic_sign_match(w, {1, 1, 1, -1}) || cyclic_sign_match(v, {1, 1, 1, -1})) a.fired.push_back('e');
  }
  if (has_two_disjoint_descents(w) || has_two_disjoint_descents(v)) a.fired.push_back('f');
  std::sort(a.fired.begin(), a.fired.end());
  for (char c : a.fired) {
    const int b = case_bound(c);
    if (!a.bound || b < *a.bound) a.bound = b;
  }

  // A relator length >= 3 makes the star graph at-least-3-regular, which
  // forces a cycle; the fired bounds and the mixed-length-3 ceiling are
  // structure theory, so breaking any of them is a defect, not data.
  if (!a.girth)
    throw std::logic_error("girth_bound_audit: acyclic star graph for " + p.word.str());
  if (a.bound && *a.girth > *a.bound)
    throw std::logic_error("girth_bound_audit: fired bound violated for " + p.word.str() +
                           " at n = " + std::to_string(n));
  if (*a.girth > 8 || (*a.girth > 6 && !(a.sign == SignClass::Mixed && a.length == 3)))
    throw std::logic_error("girth_bound_audit: girth ceiling violated for " + p.word.str() +
                           " at n = " + std::to_string(n));
  return a;
}

LargenessFlags largeness_flags(const CyclicPresentation& p) {
  if (p.redundant) throw std::invalid_argument("largeness_flags: redundant presentation");
  LargenessFlags f;
  f.delta = static_cast<int>(graph_components(build_star_graph(p).graph).size());
  for (const Letter& l : p.word.letters()) f.sigma += l.sign;
  f.alternating = sign_class(p.word) == SignClass::Alternating;
  if (f.alternating)
    f.large = f.delta >= 3;
  else
    f.large = f.delta >= 2 && !(f.delta == 2 && std::abs(f.sigma) == 2);
  return f;
}

namespace detail {

namespace {

// Exact girth of the simple component holding the given members: minimum
// over roots of the shortest closed walk seen by a BFS that skips the
// parent edge. Bipartite floor 4 allows an early exit.
int component_girth(DirectScratch& s, const int* members, int count) {
  int best = INT_MAX;
  for (int r = 0; r < count && best > 4; ++r) {
    const int root = members[r];
    for (int i = 0; i < count; ++i) s.dist[members[i]] = -1;
    int head = 0, tail = 0;
    s.dist[root] = 0;
    s.par[root] = -1;
    s.queue[tail++] = static_cast<int8_t>(root);
    while (head < tail) {
      const int u = s.queue[head++];
      if (2 * s.dist[u] >= best) break;
      for (int t = 0; t < s.deg[u]; ++t) {
        const int v = s.nbr[u][t];
        if (v == s.par[u]) continue;
        if (s.dist[v] < 0) {
          s.dist[v] = static_cast<int8_t>(s.dist[u] + 1);
          s.par[v] = static_cast<int8_t>(u);
          s.queue[tail++] = static_cast<int8_t>(v);
        } else {
          const int cand = s.dist[u] + s.dist[v] + 1;
          if (cand < best) best = cand;
        }
      }
    }
  }
  return best;
}

int component_diameter(DirectScratch& s, const int* members, int count) {
  int diam = 0;
  for (int r = 0; r < count; ++r) {
    const int root = members[r];
    for (int i = 0; i < count; ++i) s.dist[members[i]] = -1;
    int head = 0, tail = 0;
    s.dist[root] = 0;
    s.queue[tail++] = static_cast<int8_t>(root);
    while (head < tail) {
      const int u = s.queue[head++];
      if (s.dist[u] > diam) diam = s.dist[u];
      for (int t = 0; t < s.deg[u]; ++t) {
        const int v = s.nbr[u][t];
        if (s.dist[v] < 0) {
          s.dist[v] = static_cast<int8_t>(s.dist[u] + 1);
          s.queue[tail++] = static_cast<int8_t>(v);
        }
      }
    }
  }
  return diam;
}

Multigraph component_graph(const DirectScratch& s, int vertex_count, int cid) {
  int pos[64];
  std::vector<int> members;
  for (int v = 0; v < vertex_count; ++v) {
    if (s.comp_of[v] == cid) {
      pos[v] = static_cast<int>(members.size());
      members.push_back(v);
    }
  }
  Multigraph g(static_cast<int>(members.size()));
  for (int u : members) {
    for (int t = 0; t < s.deg[u]; ++t) {
      const int v = s.nbr[u][t];
      if (u < v) g.add_edge(pos[u], pos[v]);
    }
  }
  return g;
}

}  // namespace

FastVerdict special_direct_fast(std::span<const Letter> w, int n, DirectScratch& s) {
  const int k = static_cast<int>(w.size());
  if (n < 1 || n > 32 || k < 1 || k > 32)
    throw std::invalid_argument("special_direct_fast: need 1 <= n <= 32 and length <= 32");
  FastVerdict out;
  if (n < 3 || k < 3) return out;  // below the vertex floor, or degree k < 3
  subscript_multisets_span(w, n, s.ms);
  // Parallel edges end it: girth 2 would need diameter 1, impossible for a
  // bipartite component with minimum degree 3.
  auto side_simple = [n](const std::vector<int>& S) {
    for (size_t i = 0; i < S.size(); ++i) {
      if (i > 0 && S[i] == S[i - 1]) return false;
      if (2 * S[i] % n == 0) return false;
    }
    for (int a : S) {
      if (std::binary_search(S.begin(), S.end(), n - a)) return false;
    }
    return true;
  };
  for (size_t i = 1; i < s.ms.Q.size(); ++i) {
    if (s.ms.Q[i] == s.ms.Q[i - 1]) return out;
  }
  if (!side_simple(s.ms.A) || !side_simple(s.ms.B)) return out;

  const int V = 2 * n;
  std::fill(s.adj, s.adj + V, 0ull);
  std::fill(s.deg, s.deg + V, static_cast<int8_t>(0));
  auto add = [&s](int u, int v) {
    s.adj[u] |= 1ull << v;
    s.adj[v] |= 1ull << u;
    s.nbr[u][s.deg[u]++] = static_cast<int8_t>(v);
    s.nbr[v][s.deg[v]++] = static_cast<int8_t>(u);
  };
  for (int i = 0; i < n; ++i) {
    for (int a : s.ms.A) add(i, (i + a) % n);
    for (int b : s.ms.B) add(n + i, n + (i + b) % n);
    for (int q : s.ms.Q) add(i, n + (i + q) % n);
  }

  // Components, bipartiteness and the equal-size necessary condition in one
  // BFS sweep.
  std::fill(s.comp_of, s.comp_of + V, -1);
  int ncomp = 0;
  for (int v0 = 0; v0 < V; ++v0) {
    if (s.comp_of[v0] >= 0) continue;
    int head = 0, tail = 0;
    s.comp_of[v0] = ncomp;
    s.dist[v0] = 0;
    s.queue[tail++] = static_cast<int8_t>(v0);
    int size = 0;
    while (head < tail) {
      const int u = s.queue[head++];
      ++size;
      for (int t = 0; t < s.deg[u]; ++t) {
        const int v = s.nbr[u][t];
        if (s.comp_of[v] < 0) {
          s.comp_of[v] = ncomp;
          s.dist[v] = static_cast<int8_t>(s.dist[u] + 1);
          s.queue[tail++] = static_cast<int8_t>(v);
        } else if (((s.dist[u] ^ s.dist[v]) & 1) == 0) {
          return out;  // odd cycle
        }
      }
    }
    s.comp_size[ncomp] = size;
    if (size != s.comp_size[0]) return out;  // unequal components never match
    ++ncomp;
  }

  // Every component meets the positive side when Q is nonempty, and adding 1
  // to all subscripts is an automorphism of the edge set, so the component
  // of x_0 represents them all; an alternating word splits the sides, and
  // x_0 and x_0^-1 represent the two families.
  const bool alternating = s.ms.Q.empty();
  int reps[2] = {0, n};
  const int nreps = alternating ? 2 : 1;
  int m0 = -1;
  for (int ri = 0; ri < nreps; ++ri) {
    const int cid = s.comp_of[reps[ri]];
    int count = 0;
    for (int v = 0; v < V; ++v) {
      if (s.comp_of[v] == cid) s.rep_vertices[count++] = v;
    }
    const int diam = component_diameter(s, s.rep_vertices, count);
    if (diam < 2) return out;
    if (component_girth(s, s.rep_vertices, count) != 2 * diam) return out;
    if (m0 < 0) {
      m0 = diam;
    } else if (diam != m0) {
      return out;
    }
  }
  if (m0 == 2 && k < 4) return out;
  if (m0 != 2 && m0 != 3 && m0 != 4 && m0 != 6 && m0 != 8)
    throw std::logic_error("special_direct_fast: impossible generalized polygon parameter");
  if (alternating && m0 >= 3) {
    // The two circulant sides need not match; settle it exactly.
    if (!graphs_isomorphic(component_graph(s, V, s.comp_of[0]), component_graph(s, V, s.comp_of[n])))
      return out;
  }
  out.special = true;
  out.m = m0;
  out.nu = ncomp;
  return out;
}

}  // namespace detail

namespace {

int env_bound(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed < 1 || parsed > 1000000)
    throw std::invalid_argument(std::string(name) + " must be a positive integer");
  return static_cast<int>(parsed);
}

}  // namespace

int max_search_n() { return env_bound("STARPOLY_MAX_N", 32); }
int max_search_k() { return env_bound("STARPOLY_MAX_K", 6); }

SearchResult enumerate_special(int n, int k, std::optional<SignClass> sign) {
  if (n < 1 || n > max_search_n())
    throw std::invalid_argument("enumerate_special: n out of range (raise STARPOLY_MAX_N to go higher)");
  if (k < 1 || k > max_search_k())
    throw std::invalid_argument("enumerate_special: k out of range (raise STARPOLY_MAX_K to go higher)");
  SearchResult res;
  res.n = n;
  res.k = k;
  res.sign = sign;
  SubscriptMultisets ms;
  std::vector<Letter> inverted(static_cast<size_t>(k));
  res.words_scanned = detail::for_each_reduced_word(n, k, sign, [&](const detail::ScanWord& sw) {
    if (!sw.irreducible || sw.redundant || sw.proper_power) return;
    ++res.words_eligible;
    if (n < 3 || k < 3) return;  // never special: vertex floor / degree floor
    std::span<const Letter> body = sw.letters;
    if (sw.sign == SignClass::Negative) {
      for (int t = 0; t < k; ++t) {
        const Letter& src = sw.letters[static_cast<size_t>(k - 1 - t)];
        inverted[static_cast<size_t>(t)] = Letter{src.index, -src.sign};
      }
      body = inverted;
    }
    detail::subscript_multisets_span(body, n, ms);
    detail::TheoremEval ev;
    switch (sw.sign) {
      case SignClass::Positive:
      case SignClass::Negative:
        ev = detail::eval_3k(ms, k);
        if (!ev.special) ev = detail::eval_2k_positive(ms, k);
        break;
      case SignClass::Alternating:
        ev = detail::eval_2k_alternating(ms, k);
        break;
      case SignClass::Mixed:
        ev = detail::eval_2k_mixed(ms, k);
        break;
    }
    if (!ev.special) return;
    Word w(n, std::vector<Letter>(sw.letters.begin(), sw.letters.end()));
    const CyclicPresentation p = presentation_flags(w);
    auto theorem = classify_by_theorems(p);
    const SpecialityReport direct = check_special_direct(p);
    if (!theorem || !theorem->special || !direct.special || theorem->m != direct.m ||
        theorem->nu != direct.nu || theorem->m != ev.m || theorem->nu != ev.nu)
      throw std::logic_error("enumerate_special: closed form and direct check disagree on " +
                             w.str() + " at n = " + std::to_string(n));
    res.hits.push_back(SpecialHit{std::move(w), std::move(*theorem)});
  });
  std::sort(res.hits.begin(), res.hits.end(),
            [](const SpecialHit& x, const SpecialHit& y) { return word_less(x.word, y.word); });
  return res;
}

}  // namespace starpoly
