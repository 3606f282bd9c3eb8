#include "starpoly/small_cancellation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace starpoly {

namespace {

std::vector<Letter> rotation_of(std::span<const Letter> w, size_t r) {
  std::vector<Letter> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = w[(i + r) % w.size()];
  return out;
}

std::vector<Letter> inverse_of(std::span<const Letter> w) {
  std::vector<Letter> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w[w.size() - 1 - i];
    out[i] = Letter{l.index, -l.sign};
  }
  return out;
}

int common_prefix(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  const size_t lim = std::min(a.size(), b.size());
  size_t i = 0;
  while (i < lim && a[i] == b[i]) ++i;
  return static_cast<int>(i);
}

}  // namespace

PieceReport compute_pieces(const CyclicPresentation& p) {
  const int L = p.word.length();

  // Symmetrized closure as a set of distinct words: rotations of every shift
  // of w and of its inverse.
  std::set<std::vector<Letter>> closure;
  for (int s = 0; s < p.n; ++s) {
    const Word rel = shift(p.word, s);
    const std::vector<Letter> inv = inverse_of(rel.letters());
    for (size_t r = 0; r < static_cast<size_t>(L); ++r) {
      closure.insert(rotation_of(rel.letters(), r));
      closure.insert(rotation_of(inv, r));
    }
  }

  // The longest common prefix over all pairs of a sorted set is attained by
  // a neighbouring pair.
  int max_piece = 0;
  const std::vector<std::vector<Letter>> sorted(closure.begin(), closure.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    max_piece = std::max(max_piece, common_prefix(sorted[i], sorted[i + 1]));

  // A proper power s^t coincides with its rotation by l(s), an overlap the
  // set view above cannot see.
  if (p.power >= 2) max_piece = std::max(max_piece, L - p.root.length());

  PieceReport report;
  report.max_piece_length = max_piece;
  report.min_relator_length = L;
  if (max_piece > 0) report.c_parameter = (L - 1) / max_piece + 1;
  return report;
}

TParameter t_parameter(const PieceReport& pieces, std::optional<int> star_girth) {
  TParameter t;
  t.advisory = !pieces.satisfies_c(3);
  if (star_girth && *star_girth < 3) {
    t.advisory = true;  // loops or parallel edges: outside the C(3) regime
    return t;
  }
  t.value = star_girth;
  return t;
}

TParameter t_parameter(const PieceReport& pieces, const StarGraph& star) {
  return t_parameter(pieces, graph_profile(star.graph).girth);
}

void assert_high_t_structure(const CyclicPresentation& p, const TParameter& t) {
  if (!t.value || *t.value < 7) return;
  if (p.redundant || p.proper_power() || p.word.length() < 3) return;
  if (sign_class(p.word) == SignClass::Negative) return;

  const bool ok =
      p.word.length() == 3 && *t.value <= 8 && sign_class(p.word) != SignClass::Positive;
  if (!ok)
    throw std::logic_error("T(" + std::to_string(*t.value) + ") reported for " + p.word.str() +
                           " at n=" + std::to_string(p.n) +
                           "; a non-redundant non-negative non-power word can only do this "
                           "when mixed of length 3 with T at most 8");
}

}  // namespace starpoly
