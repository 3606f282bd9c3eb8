#pragma once
// Small cancellation data of a cyclic presentation. A piece is a common
// prefix of two distinct elements of the symmetrized closure (every rotation
// of every relator and of every inverse); a proper-power relator additionally
// overlaps a rotation of itself that coincides with it as a word, so each
// power s^t contributes a self-piece of length l(s^t) - l(s).

#include <optional>

#include "starpoly/star_graph.hpp"
#include "starpoly/word.hpp"

namespace starpoly {

struct PieceReport {
  int max_piece_length = 0;  // 0: no piece at all
  int min_relator_length = 0;
  // Largest p certified by the length bound max_piece * (p-1) < min relator
  // length; empty means every p (no pieces). The bound is sufficient for
  // C(p), not necessary.
  std::optional<int> c_parameter;

  bool satisfies_c(int p) const { return !c_parameter || *c_parameter >= p; }
};

PieceReport compute_pieces(const CyclicPresentation& p);

// T(q) says the star graph has no reduced closed path of length l with
// 3 <= l < q. Under C(3) the star graph has girth >= 3 and the largest such
// q is the girth itself (no value: no reduced closed path at all, so every q
// works). Advisory is set when C(3) is not certified by the piece bound or
// when the girth is below 3; in the latter case no value is reported.
struct TParameter {
  std::optional<int> value;
  bool advisory = false;
};

TParameter t_parameter(const PieceReport& pieces, std::optional<int> star_girth);
TParameter t_parameter(const PieceReport& pieces, const StarGraph& star);

// A presentation that is non-redundant, not a proper power, of length >= 3,
// and not negative can only reach T(q) with q >= 7 if the word is mixed of
// length exactly 3 and q <= 8. Violations would falsify that structure
// theorem, so this throws std::logic_error.
void assert_high_t_structure(const CyclicPresentation& p, const TParameter& t);

}  // namespace starpoly
