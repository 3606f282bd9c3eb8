#pragma once
// Words over the free group on x_0..x_{n-1}, subscripts always reduced mod n,
// together with the word-level data of a cyclic presentation P_n(w): the
// shift x_i -> x_{i+1} applied to a single defining word w yields the n
// relators w, shift(w), ..., shift^{n-1}(w).
//
// Standing assumption (enforced by presentation_flags): x_0 occurs in w.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace starpoly {

struct Letter {
  int index = 0;  // in [0, rank)
  int sign = +1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letter order used for canonical word comparisons: x0 < x0^-1 < x1 < ...
inline bool operator<(Letter a, Letter b) {
  if (a.index != b.index) return a.index < b.index;
  return a.sign > b.sign;
}

class Word {
 public:
  Word() = default;
  // Indices are reduced mod rank, so callers may pass any integers.
  Word(int rank, std::vector<Letter> letters);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  const Letter& operator[](int i) const { return letters_[static_cast<size_t>(i)]; }

  // Canonical form: letters joined by single spaces, exponents only as ^-1.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;
};

// Lexicographic on letter sequences (shorter word wins a tie); ranks must match.
bool word_less(const Word& a, const Word& b);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, size_t position);
  size_t position;
};

// Grammar:  word := term (('*'|' ')+ term)*   term := 'x' int ('^' int)?
// A term x_i^e with |e| = k expands to k copies of x_i^(sign e); e may be 0.
// Leading and trailing separators are tolerated. Throws ParseError.
Word parse_word(const std::string& text, int rank);

enum class SignClass { Positive, Negative, Alternating, Mixed };

const char* to_string(SignClass c);

// Exactly one class applies to a nonempty cyclically reduced word:
// all exponents +1, all -1, signs strictly alternating around the cycle
// (even length), or none of these (mixed).
SignClass sign_class(const Word& w);

struct Normalized {
  Word word;  // cyclic reduction of the input
  Word root;  // word == root^power with power maximal
  int power = 1;
};

// Free plus cyclic reduction and root extraction. Throws std::invalid_argument
// if the input reduces to the empty word.
Normalized normalize(const Word& w);

// The length-2 cyclic subword data of a cyclically reduced word w, entries
// mod n.  A length-l word contributes exactly l entries across A, B, Q+, Q-:
//   x_i x_{i+a}^-1   -> a in A          x_i^-1 x_{i+b}  -> b in B
//   x_i x_{i+q}      -> q in Q+         x_{i+q}^-1 x_i^-1 -> q in Q-
// and Q is the multiset union of Q+ and Q-.  Their alternating sum vanishes:
// sum(A) + sum(B) + sum(Q+) - sum(Q-) == 0 mod n.
struct SubscriptMultisets {
  int n = 1;
  std::vector<int> A, B, Q, Qplus, Qminus;  // sorted ascending, with repeats
  int sigma = 0;                            // exponent sum
  int dA = 1, dB = 1;                       // gcd(n, entries); == n when empty
  std::optional<int> q0;                    // min of Q; empty iff w alternating
  std::optional<int> d;  // gcd(n, A, B, {q - q0}); empty iff w alternating
};

// Pre: w nonempty and cyclically reduced (throws std::invalid_argument).
SubscriptMultisets subscript_multisets(const Word& w);

struct CyclicPresentation {
  int n = 1;
  Word word;  // cyclically reduced
  Word root;  // word == root^power
  int power = 1;
  bool irreducible = false;  // gcd(n, subscripts occurring in word) == 1
  bool redundant = false;    // some relator freely conjugate to another or its inverse

  bool proper_power() const { return power >= 2; }
};

// Normalizes w, then computes the presentation-level flags on the reduced
// word.  Throws std::invalid_argument if w reduces to the empty word or if
// x_0 does not occur in the reduced word (callers may remap via shift()).
CyclicPresentation presentation_flags(const Word& w);

// Convenience: parse, then presentation_flags.
CyclicPresentation make_presentation(int n, const std::string& word_text);

// Subscript/letter transforms.  Each returns a word over the same rank
// except contract(), which divides the rank by delta.
Word shift(const Word& w, int j);                  // x_i -> x_{i+j}
Word invert(const Word& w);                        // formal inverse
Word rotate(const Word& w, int j);                 // cyclic permutation by j letters
Word multiply_subscripts(const Word& w, int unit); // x_i -> x_{u*i}; pre gcd(u, n) == 1
Word contract(const Word& w, int delta);           // x_{j*delta} -> x_j; pre delta | n and delta | every subscript

// Span-level primitives shared with the search paths, which work on stack
// buffers instead of Word values.  All expect indices already in [0, n).
namespace detail {

bool is_cyclically_reduced(std::span<const Letter> w, int n);
SignClass sign_class_span(std::span<const Letter> w);
int root_power(std::span<const Letter> w);  // largest t with w a t-th power
bool is_irreducible(std::span<const Letter> w, int n);
// True iff some shift^s(w), 0 < s < n, is a cyclic rotation of w or of its
// inverse; equivalently some relator of P_n(w) is freely conjugate to a
// different relator or its inverse.  Pre: w cyclically reduced.
bool is_redundant(std::span<const Letter> w, int n);
void subscript_multisets_span(std::span<const Letter> w, int n, SubscriptMultisets& out);

}  // namespace detail

}  // namespace starpoly
