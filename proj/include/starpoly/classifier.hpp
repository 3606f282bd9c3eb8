#pragma once
// Deciding (m,k,nu)-speciality of cyclic presentations two independent ways.
//
// The direct route reads the definition off the built star graph: nu pairwise
// isomorphic components, each the incidence graph of a generalized m-gon with
// minimum degree 3, every relator of length k, and k >= 4 when m = 2. The
// closed-form route evaluates the subscript criteria that characterize the
// m = 3 and m = 2 cases for each sign class. The search paths run both and
// treat any disagreement as a fatal defect (std::logic_error), never as data.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starpoly/gen_polygon.hpp"
#include "starpoly/star_graph.hpp"
#include "starpoly/word.hpp"

namespace starpoly {

struct SpecialityReport {
  bool special = false;
  int m = 0;   // polygon parameter; 0 when not special
  int k = 0;   // relator length (the given word, powers kept whole)
  int nu = 0;  // component count; 0 when not special
  std::string method;  // "direct", "theorem:positive_m3", ...
  std::string reason;  // first failed requirement; empty when special
  std::vector<PolygonVerdict> component_verdicts;  // direct route only

  // Hypothesis record of the word the verdict is about.
  bool irreducible = false;
  bool redundant = false;
  bool proper_power = false;
  SignClass sign = SignClass::Mixed;

  std::string verdict_string() const;  // "SPECIAL(3,3,1)" or "NOT_SPECIAL"
};

// Definition route. Accepts any presentation, redundant and proper-power ones
// included; n < 3 is never special. May throw IsomorphismTooLarge on
// components past the exact-isomorphism limit.
SpecialityReport check_special_direct(const CyclicPresentation& p);

// Closed-form criteria. Each checks its hypotheses (sign class, length,
// irreducible, non-redundant, and where stated non-proper-power) and throws
// std::invalid_argument when they fail; callers outside the hypotheses must
// use check_special_direct. Each verdict decides speciality for its own m
// only.
//
// Positive w, length k >= 3, not a proper power: (3,k,nu)-special iff
// n = nu * (k^2 - k + 1), the q's are all congruent mod nu, nu divides k,
// and Q reduces mod k^2 - k + 1 to a perfect difference set.
SpecialityReport check_3k_criteria(const CyclicPresentation& p);

// Positive w, not a proper power: (2,k,nu)-special iff either k >= 5 is odd,
// n = k and Q = {0,1,..,n-1} (then nu = 1, the star graph is K_{n,n}), or
// k >= 4 is even, n = 2k and Q = {1,3,..,n-1} (then nu = 2).
SpecialityReport check_2k_positive(const CyclicPresentation& p);

// Alternating w of length k >= 4 (proper powers allowed): (2,k,2)-special
// iff n = 2k and A and B each consist of k/2 distinct odd residues with no
// {a, n-a} pair inside either multiset.
SpecialityReport check_2k_alternating(const CyclicPresentation& p);

// Mixed w, not a proper power: (2,k,nu)-special iff nu := n/k is an integer,
// 4 divides k, A and B are (k/4)-element sets of distinct odd multiples of
// nu with no {a, n-a} pair inside either, and Q consists of k/2 distinct
// values forming one full congruence class c mod 2*nu with gcd(c, nu) = 1.
SpecialityReport check_2k_mixed(const CyclicPresentation& p);

// Dispatch to the closed forms whose hypotheses p meets, inverting a negative
// word first (inversion leaves the star graph unchanged, so the verdict
// transfers). Positive words chain the m = 3 and m = 2 criteria; a miss on
// both is a definitive NOT_SPECIAL because special presentations only exist
// with m = 2, or with m = 3 and a positive or negative word. Returns empty
// when no closed form applies: n < 3, k < 3, reducible, redundant, or a
// proper power outside the alternating case.
std::optional<SpecialityReport> classify_by_theorems(const CyclicPresentation& p);

// Structural girth-bound audit. Each case is a syntactic test on the word,
// evaluated on w and on its inverse, that forces an upper bound on the star
// graph girth:
//   'a'  two cyclically disjoint length-2 subwords carrying the same
//        shift-normalized edge descriptor force a parallel edge: girth <= 2
//   'f'  two cyclically disjoint (+,-) descents force girth <= 4
//   'b'  a positive word of length 3 forces girth <= 6
//   'c','d','e'  length-4 cyclic sign patterns (+,+,-,-), (+,+,+,+),
//        (+,+,+,-) force girth <= 6
// Pre (std::invalid_argument): non-redundant, not a proper power, length
// >= 3. A violated bound, girth > 8, or girth in {7,8} on anything but a
// mixed length-3 word would falsify the structure theory: std::logic_error.
struct GirthAudit {
  std::optional<int> girth;
  std::vector<char> fired;   // subset of {'a','b','c','d','e','f'}, sorted
  std::optional<int> bound;  // strongest (smallest) fired bound
  SignClass sign = SignClass::Mixed;
  int length = 0;
};
GirthAudit girth_bound_audit(const CyclicPresentation& p);

// Arithmetic sufficient condition for largeness, read off the star graph:
// delta components and exponent sum sigma give a large group when the word
// is alternating and delta >= 3, or non-alternating and delta >= 2 with
// (delta, |sigma|) != (2, 2). Pre (std::invalid_argument): non-redundant.
struct LargenessFlags {
  int delta = 0;  // star graph component count
  int sigma = 0;  // exponent sum of the defining word
  bool alternating = false;
  bool large = false;
};
LargenessFlags largeness_flags(const CyclicPresentation& p);

struct SpecialHit {
  Word word;
  SpecialityReport report;
};

struct SearchResult {
  int n = 0;
  int k = 0;
  std::optional<SignClass> sign;  // empty: every sign class
  long long words_scanned = 0;    // cyclically reduced words visited
  long long words_eligible = 0;   // also irreducible, non-redundant, no power
  std::vector<SpecialHit> hits;   // sorted by word_less
};

// Exhaustive scan of the cyclically reduced length-k words with first
// subscript 0 (one representative per subscript shift), skipping words that
// are reducible, redundant, or proper powers. Every surviving word is
// classified by the closed forms, and every hit is recomputed through
// check_special_direct; disagreement throws std::logic_error. Bounds default
// to n <= 32 and k <= 6, overridable through the STARPOLY_MAX_N and
// STARPOLY_MAX_K environment variables; out-of-range arguments throw
// std::invalid_argument.
SearchResult enumerate_special(int n, int k, std::optional<SignClass> sign = {});

int max_search_n();
int max_search_k();

namespace detail {

// One word of the exhaustive scan, flags precomputed.
struct ScanWord {
  std::span<const Letter> letters;  // length k, first subscript 0
  SignClass sign = SignClass::Mixed;
  bool irreducible = false;
  bool redundant = false;
  bool proper_power = false;
};

SignClass sign_pattern_class(unsigned mask, int k);

// Visits every cyclically reduced length-k word over rank n whose first
// subscript is 0, in sign-pattern-major order, and returns the visit count.
// The filter keeps only patterns of one sign class. The span passed to f is
// only valid during the call.
template <class F>
long long for_each_reduced_word(int n, int k, std::optional<SignClass> filter, F&& f) {
  if (n < 1 || k < 1 || k > 30) throw std::invalid_argument("for_each_reduced_word: need n >= 1 and 1 <= k <= 30");
  std::vector<Letter> buf(static_cast<size_t>(k));
  long long scanned = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    SignClass cls = sign_pattern_class(mask, k);
    if (filter && *filter != cls) continue;
    for (int t = 0; t < k; ++t) buf[static_cast<size_t>(t)].sign = ((mask >> t) & 1u) ? -1 : +1;
    // Cancellation is only possible across a sign change, so cyclic
    // reduction pins down which neighbours must differ in subscript.
    ScanWord sw;
    sw.sign = cls;
    while (true) {
      bool reduced = true;
      for (int t = 0; t < k && reduced; ++t) {
        const Letter& cur = buf[static_cast<size_t>(t)];
        const Letter& nxt = buf[static_cast<size_t>((t + 1) % k)];
        if (cur.sign != nxt.sign && cur.index == nxt.index) reduced = false;
      }
      if (reduced) {
        ++scanned;
        sw.letters = buf;
        sw.irreducible = is_irreducible(buf, n);
        sw.redundant = is_redundant(buf, n);
        sw.proper_power = root_power(buf) >= 2;
        f(static_cast<const ScanWord&>(sw));
      }
      int t = k - 1;
      while (t >= 1 && buf[static_cast<size_t>(t)].index == n - 1) buf[static_cast<size_t>(t--)].index = 0;
      if (t < 1) break;
      ++buf[static_cast<size_t>(t)].index;
    }
  }
  return scanned;
}

// Closed-form condition cores shared by the public checks and the scan. They
// assume the hypotheses of their theorem already hold for the word behind ms
// (positive / alternating / mixed as named, irreducible, non-redundant, and
// except for the alternating case not a proper power). On a special verdict
// each also asserts the predicted component count against the multiset gcd
// (std::logic_error on mismatch: that would falsify the component theory).
struct TheoremEval {
  bool special = false;
  int m = 0;
  int nu = 0;
  const char* fail = nullptr;  // static reason string when not special
};
TheoremEval eval_3k(const SubscriptMultisets& ms, int k);
TheoremEval eval_2k_positive(const SubscriptMultisets& ms, int k);
TheoremEval eval_2k_alternating(const SubscriptMultisets& ms, int k);
TheoremEval eval_2k_mixed(const SubscriptMultisets& ms, int k);

// Allocation-free direct check over the predicted star graph, for the
// exhaustive ranges. Pre: w cyclically reduced over rank n, non-redundant,
// not a proper power, length <= 32, and n <= 32 so the 2n vertices fit a
// 64-bit adjacency mask. Agrees with check_special_direct on its whole
// domain; kept separate only for speed.
struct DirectScratch {
  SubscriptMultisets ms;
  uint64_t adj[64];
  int8_t deg[64];
  int8_t nbr[64][32];
  int8_t dist[64];
  int8_t par[64];
  int8_t queue[64];
  int comp_of[64];
  int comp_size[64];
  int rep_vertices[64];
};
struct FastVerdict {
  bool special = false;
  int m = 0;
  int nu = 0;
};
FastVerdict special_direct_fast(std::span<const Letter> w, int n, DirectScratch& s);

}  // namespace detail

}  // namespace starpoly
