#include <random>
#include <set>

#include "doctest.h"
#include "starpoly/word.hpp"

using namespace starpoly;

namespace {

Word w_of(int rank, const std::string& text) { return parse_word(text, rank); }

// Random cyclically reduced word over rank n, letter signs free.
Word random_reduced_word(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  while (true) {
    std::vector<Letter> ls(static_cast<size_t>(k));
    for (Letter& l : ls) l = {idx(rng), sgn(rng) ? 1 : -1};
    Word w(n, ls);
    bool ok = true;
    for (int t = 0; t < k && ok; ++t) {
      const Letter &a = w[t], &b = w[(t + 1) % k];
      if (a.sign != b.sign && a.index == b.index) ok = false;
    }
    if (ok) return w;
  }
}

std::vector<int> minus_mod(const std::vector<int>& v, int n) {
  std::vector<int> out;
  for (int x : v) out.push_back(x == 0 ? 0 : n - x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("word") {

TEST_CASE("parse and str round-trip") {
  CHECK(w_of(7, "x0 x1 x3").str() == "x0 x1 x3");
  CHECK(w_of(7, "x0*x1^-1*x0^2").str() == "x0 x1^-1 x0 x0");
  CHECK(w_of(5, "x2^3").str() == "x2 x2 x2");
  CHECK(w_of(5, "x1^-2").str() == "x1^-1 x1^-1");
  CHECK(w_of(7, "x9").str() == "x2");  // subscripts reduce mod rank
  Word w = w_of(13, "x0 x0 x1 x4");
  CHECK(parse_word(w.str(), 13) == w);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_word("y0", 5), ParseError);
  CHECK_THROWS_AS(parse_word("x", 5), ParseError);
  CHECK_THROWS_AS(parse_word("x0^", 5), ParseError);
  CHECK_THROWS_AS(parse_word("x0 @", 5), ParseError);
  try {
    parse_word("x0 y1", 5);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("word constructor normalizes indices and validates") {
  Word w(5, {{7, 1}, {-1, -1}});
  CHECK(w[0].index == 2);
  CHECK(w[1].index == 4);
  CHECK_THROWS_AS(Word(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Word(5, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("word_less orders by letters, shorter first on ties") {
  CHECK(word_less(w_of(5, "x0"), w_of(5, "x0^-1")));
  CHECK(word_less(w_of(5, "x0^-1"), w_of(5, "x1")));
  CHECK(word_less(w_of(5, "x0"), w_of(5, "x0 x1")));
  CHECK(!word_less(w_of(5, "x1"), w_of(5, "x0 x3")));
}

TEST_CASE("sign_class") {
  CHECK(sign_class(w_of(7, "x0 x1 x3")) == SignClass::Positive);
  CHECK(sign_class(w_of(7, "x0^-1 x1^-1")) == SignClass::Negative);
  CHECK(sign_class(w_of(7, "x0 x1^-1")) == SignClass::Alternating);
  CHECK(sign_class(w_of(7, "x0 x1 x3^-1")) == SignClass::Mixed);
  CHECK(sign_class(w_of(7, "x0")) == SignClass::Positive);
  CHECK(std::string(to_string(SignClass::Alternating)) == "alternating");
}

TEST_CASE("normalize reduces freely and cyclically, extracts the root") {
  Normalized n1 = normalize(w_of(7, "x0 x1 x1^-1 x2"));
  CHECK(n1.word.str() == "x0 x2");
  Normalized n2 = normalize(w_of(7, "x1 x0 x1^-1"));
  CHECK(n2.word.str() == "x0");
  Normalized n3 = normalize(w_of(7, "x0 x1 x3 x0 x1 x3"));
  CHECK(n3.power == 2);
  CHECK(n3.root.str() == "x0 x1 x3");
  CHECK(n3.word.length() == 6);
  Normalized n4 = normalize(w_of(7, "x0 x1 x3"));
  CHECK(n4.power == 1);
  CHECK_THROWS_AS(normalize(w_of(7, "x0 x0^-1")), std::invalid_argument);
  // idempotent on already reduced input
  Normalized again = normalize(n1.word);
  CHECK(again.word == n1.word);
  CHECK(again.power == 1);
}

TEST_CASE("subscript multisets of the core fixtures") {
  SubscriptMultisets ms = subscript_multisets(w_of(7, "x0 x1 x3"));
  CHECK(ms.A.empty());
  CHECK(ms.B.empty());
  CHECK(ms.Q == std::vector<int>{1, 2, 4});
  CHECK(ms.Qplus == std::vector<int>{1, 2, 4});
  CHECK(ms.Qminus.empty());
  CHECK(ms.sigma == 3);
  CHECK(ms.dA == 7);
  CHECK(ms.dB == 7);
  CHECK(ms.q0 == 1);
  CHECK(ms.d == 1);

  ms = subscript_multisets(w_of(4, "x0 x1 x0^-1 x1^-1"));
  CHECK(ms.A == std::vector<int>{3});
  CHECK(ms.B == std::vector<int>{3});
  CHECK(ms.Qplus == std::vector<int>{1});
  CHECK(ms.Qminus == std::vector<int>{3});
  CHECK(ms.Q == std::vector<int>{1, 3});
  CHECK(ms.sigma == 0);
  CHECK(ms.dA == 1);
  CHECK(ms.dB == 1);
  CHECK(ms.q0 == 1);
  CHECK(ms.d == 1);

  // alternating: Q empty, q0 and d stay empty
  ms = subscript_multisets(w_of(6, "x0 x1^-1"));
  CHECK(ms.A == std::vector<int>{1});
  CHECK(ms.B == std::vector<int>{5});
  CHECK(ms.Q.empty());
  CHECK(!ms.q0.has_value());
  CHECK(!ms.d.has_value());
  CHECK(ms.sigma == 0);

  CHECK_THROWS_AS(subscript_multisets(w_of(6, "x1 x0 x1^-1")), std::invalid_argument);
}

TEST_CASE("multiset identities hold on random reduced words") {
  std::mt19937 rng(20260817);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 14);
    int k = 2 + static_cast<int>(rng() % 7);
    Word w = random_reduced_word(rng, n, k);
    SubscriptMultisets ms = subscript_multisets(w);

    CHECK(ms.A.size() == ms.B.size());
    CHECK(static_cast<int>(ms.A.size() + ms.B.size() + ms.Q.size()) == k);
    CHECK(ms.Q.size() == ms.Qplus.size() + ms.Qminus.size());

    long long total = 0;
    for (int a : ms.A) total += a;
    for (int b : ms.B) total += b;
    for (int q : ms.Qplus) total += q;
    for (int q : ms.Qminus) total -= q;
    CHECK(((total % n) + n) % n == 0);

    int sigma = 0;
    for (const Letter& l : w.letters()) sigma += l.sign;
    CHECK(ms.sigma == sigma);

    // span entry point agrees with the Word entry point
    SubscriptMultisets span_ms;
    detail::subscript_multisets_span(w.letters(), n, span_ms);
    CHECK(span_ms.A == ms.A);
    CHECK(span_ms.B == ms.B);
    CHECK(span_ms.Q == ms.Q);
    CHECK(span_ms.Qplus == ms.Qplus);
    CHECK(span_ms.Qminus == ms.Qminus);
    CHECK(span_ms.sigma == ms.sigma);
    CHECK(span_ms.d == ms.d);

    // invariance under shift and rotation
    SubscriptMultisets shifted = subscript_multisets(shift(w, 1 + static_cast<int>(rng() % n)));
    CHECK(shifted.A == ms.A);
    CHECK(shifted.B == ms.B);
    CHECK(shifted.Qplus == ms.Qplus);
    CHECK(shifted.Qminus == ms.Qminus);
    SubscriptMultisets rotated = subscript_multisets(rotate(w, static_cast<int>(rng() % k)));
    CHECK(rotated.A == ms.A);
    CHECK(rotated.B == ms.B);
    CHECK(rotated.Q == ms.Q);

    // inversion negates A and B and swaps the two Q sides
    SubscriptMultisets inv = subscript_multisets(invert(w));
    CHECK(inv.A == minus_mod(ms.A, n));
    CHECK(inv.B == minus_mod(ms.B, n));
    CHECK(inv.Qplus == ms.Qminus);
    CHECK(inv.Qminus == ms.Qplus);
    CHECK(inv.sigma == -ms.sigma);
  }
}

TEST_CASE("presentation flags") {
  CyclicPresentation p = make_presentation(7, "x0 x1 x3");
  CHECK(p.n == 7);
  CHECK(p.irreducible);
  CHECK(!p.redundant);
  CHECK(!p.proper_power());
  CHECK(p.power == 1);

  CyclicPresentation reducible = make_presentation(6, "x0 x2 x4");
  CHECK(!reducible.irreducible);

  CyclicPresentation red = make_presentation(6, "x0 x1 x3 x4");
  CHECK(red.redundant);  // shifting by 3 equals rotating by 2

  CyclicPresentation pw = make_presentation(7, "x0 x1 x3 x0 x1 x3");
  CHECK(pw.proper_power());
  CHECK(pw.root.str() == "x0 x1 x3");
  CHECK(pw.power == 2);
  CHECK(!pw.redundant);

  // redundancy against the inverse word: shift by 1 of x0 x1^-1 at n = 2
  CHECK(make_presentation(2, "x0 x1^-1").redundant);
  CHECK(!make_presentation(3, "x0 x1^-1").redundant);

  // x0 must occur in the reduced word
  CHECK_THROWS_AS(make_presentation(7, "x1 x2"), std::invalid_argument);
  CHECK_THROWS_AS(make_presentation(7, "x0 x0^-1"), std::invalid_argument);
  // an x0 occurrence of either sign satisfies the standing assumption
  CHECK_NOTHROW(make_presentation(7, "x1 x0^-1 x2"));
}

TEST_CASE("redundant example from the theorem boundary is recognized") {
  // 21-letter word whose presentation at n = 7 repeats relators
  CyclicPresentation p =
      make_presentation(7, "x0^2 x1 x4^2 x5 x1^2 x2 x5^2 x6 x2^2 x3 x6^2 x0 x3^2 x4");
  CHECK(p.word.length() == 21);
  CHECK(p.redundant);
  CHECK(p.irreducible);
  CHECK(!p.proper_power());
}

TEST_CASE("subscript transforms") {
  Word w = w_of(7, "x0 x1 x3");
  CHECK(shift(w, 1).str() == "x1 x2 x4");
  CHECK(shift(w, -1).str() == "x6 x0 x2");
  CHECK(invert(w).str() == "x3^-1 x1^-1 x0^-1");
  CHECK(rotate(w, 1).str() == "x1 x3 x0");
  CHECK(rotate(w, 3) == w);
  CHECK(multiply_subscripts(w, 2).str() == "x0 x2 x6");
  CHECK_THROWS_AS(multiply_subscripts(w_of(6, "x0 x1"), 2), std::invalid_argument);

  Word big = w_of(21, "x0 x3 x9");
  Word small = contract(big, 3);
  CHECK(small.rank() == 7);
  CHECK(small.str() == "x0 x1 x3");
  CHECK_THROWS_AS(contract(w_of(21, "x0 x1 x5"), 3), std::invalid_argument);
}

TEST_CASE("span predicates agree with word-level ones") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 10);
    int k = 1 + static_cast<int>(rng() % 6);
    Word w = random_reduced_word(rng, n, k);
    CHECK(detail::is_cyclically_reduced(w.letters(), n));
    CHECK(detail::sign_class_span(w.letters()) == sign_class(w));
    Normalized nm = normalize(w);
    if (nm.word == w) CHECK(detail::root_power(w.letters()) == nm.power);
  }
}

}  // TEST_SUITE
