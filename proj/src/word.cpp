#include "starpoly/word.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace starpoly {

namespace {

int mod(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

Letter inverse_of(Letter l) { return {l.index, -l.sign}; }

}  // namespace

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank_ < 1) throw std::invalid_argument("word rank must be at least 1");
  for (Letter& l : letters_) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    l.index = mod(l.index, rank_);
  }
}

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += 'x';
    out += std::to_string(letters_[i].index);
    if (letters_[i].sign < 0) out += "^-1";
  }
  return out;
}

bool word_less(const Word& a, const Word& b) {
  const auto as = a.letters(), bs = b.letters();
  return std::lexicographical_compare(as.begin(), as.end(), bs.begin(), bs.end());
}

ParseError::ParseError(const std::string& what, size_t pos)
    : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

namespace {

bool is_separator(char c) { return c == ' ' || c == '*'; }

// Parses an optionally signed decimal integer; advances pos past it.
long long parse_int(const std::string& s, size_t& pos, const char* what) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError(std::string("expected ") + what, start);
  long long v = 0;
  while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > (1ll << 40)) throw ParseError(std::string(what) + " out of range", start);
    ++pos;
  }
  return neg ? -v : v;
}

}  // namespace

Word parse_word(const std::string& text, int rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be at least 1");
  constexpr long long kMaxExponent = 4096;  // keeps hostile inputs from exploding expansion
  std::vector<Letter> letters;
  size_t pos = 0;
  while (pos < text.size() && is_separator(text[pos])) ++pos;
  bool saw_term = false;
  while (pos < text.size()) {
    if (text[pos] != 'x') throw ParseError("expected 'x'", pos);
    ++pos;
    long long subscript = parse_int(text, pos, "integer subscript");
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = parse_int(text, pos, "integer exponent");
      if (exponent > kMaxExponent || exponent < -kMaxExponent)
        throw ParseError("integer exponent out of range", pos);
    }
    int sign = exponent < 0 ? -1 : +1;
    for (long long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
      letters.push_back({mod(subscript, rank), sign});
    saw_term = true;
    if (pos < text.size()) {
      if (!is_separator(text[pos])) throw ParseError("expected separator", pos);
      while (pos < text.size() && is_separator(text[pos])) ++pos;
    }
  }
  if (!saw_term || letters.empty()) throw ParseError("empty word", pos);
  return Word(rank, std::move(letters));
}

const char* to_string(SignClass c) {
  switch (c) {
    case SignClass::Positive: return "positive";
    case SignClass::Negative: return "negative";
    case SignClass::Alternating: return "alternating";
    case SignClass::Mixed: return "mixed";
  }
  return "?";
}

SignClass sign_class(const Word& w) {
  if (w.empty()) throw std::invalid_argument("sign_class: empty word");
  if (!detail::is_cyclically_reduced(w.letters(), w.rank()))
    throw std::invalid_argument("sign_class: word is not cyclically reduced");
  return detail::sign_class_span(w.letters());
}

Normalized normalize(const Word& w) {
  // Free reduction.
  std::vector<Letter> stack;
  stack.reserve(w.letters().size());
  for (Letter l : w.letters()) {
    if (!stack.empty() && stack.back() == inverse_of(l))
      stack.pop_back();
    else
      stack.push_back(l);
  }
  // Cyclic reduction: trim inverse first/last pairs.
  size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == inverse_of(stack[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Letter> reduced(stack.begin() + lo, stack.begin() + hi);
  if (reduced.empty()) throw std::invalid_argument("word reduces to the empty word");

  Word word(w.rank(), std::move(reduced));
  int power = detail::root_power(word.letters());
  int period = word.length() / power;
  std::vector<Letter> root_letters(word.letters().begin(), word.letters().begin() + period);
  return {word, Word(w.rank(), std::move(root_letters)), power};
}

SubscriptMultisets subscript_multisets(const Word& w) {
  if (w.empty()) throw std::invalid_argument("subscript_multisets: empty word");
  if (!detail::is_cyclically_reduced(w.letters(), w.rank()))
    throw std::invalid_argument("subscript_multisets: word is not cyclically reduced");
  SubscriptMultisets out;
  detail::subscript_multisets_span(w.letters(), w.rank(), out);
  return out;
}

CyclicPresentation presentation_flags(const Word& w) {
  Normalized norm = normalize(w);
  bool has_x0 = false;
  for (Letter l : norm.word.letters()) has_x0 |= l.index == 0;
  if (!has_x0)
    throw std::invalid_argument(
        "x_0 does not occur in the reduced word; shift() the word so that it does");
  CyclicPresentation p;
  p.n = w.rank();
  p.word = norm.word;
  p.root = norm.root;
  p.power = norm.power;
  p.irreducible = detail::is_irreducible(norm.word.letters(), p.n);
  p.redundant = detail::is_redundant(norm.word.letters(), p.n);
  return p;
}

CyclicPresentation make_presentation(int n, const std::string& word_text) {
  return presentation_flags(parse_word(word_text, n));
}

Word shift(const Word& w, int j) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (Letter& l : out) l.index = mod(static_cast<long long>(l.index) + j, w.rank());
  return Word(w.rank(), std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : out) l.sign = -l.sign;
  return Word(w.rank(), std::move(out));
}

Word rotate(const Word& w, int j) {
  if (w.empty()) return w;
  int len = w.length();
  int r = mod(j, len);
  std::vector<Letter> out;
  out.reserve(static_cast<size_t>(len));
  for (int t = 0; t < len; ++t) out.push_back(w[(t + r) % len]);
  return Word(w.rank(), std::move(out));
}

Word multiply_subscripts(const Word& w, int unit) {
  int u = mod(unit, w.rank());
  if (std::gcd(u, w.rank()) != 1)
    throw std::invalid_argument("multiply_subscripts: unit is not invertible mod n");
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (Letter& l : out) l.index = mod(static_cast<long long>(l.index) * u, w.rank());
  return Word(w.rank(), std::move(out));
}

Word contract(const Word& w, int delta) {
  if (delta < 1 || w.rank() % delta != 0)
    throw std::invalid_argument("contract: delta must divide the rank");
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (Letter& l : out) {
    if (l.index % delta != 0)
      throw std::invalid_argument("contract: delta must divide every subscript");
    l.index /= delta;
  }
  return Word(w.rank() / delta, std::move(out));
}

namespace detail {

bool is_cyclically_reduced(std::span<const Letter> w, int /*n*/) {
  const size_t len = w.size();
  for (size_t t = 0; t < len; ++t) {
    const Letter& a = w[t];
    const Letter& b = w[(t + 1) % len];
    if (a.index == b.index && a.sign == -b.sign) return false;
  }
  return true;
}

SignClass sign_class_span(std::span<const Letter> w) {
  const size_t len = w.size();
  bool all_pos = true, all_neg = true, alternating = true;
  for (size_t t = 0; t < len; ++t) {
    all_pos &= w[t].sign > 0;
    all_neg &= w[t].sign < 0;
    alternating &= w[t].sign != w[(t + 1) % len].sign;
  }
  if (all_pos) return SignClass::Positive;
  if (all_neg) return SignClass::Negative;
  if (alternating) return SignClass::Alternating;
  return SignClass::Mixed;
}

int root_power(std::span<const Letter> w) {
  const int len = static_cast<int>(w.size());
  for (int period = 1; period <= len / 2; ++period) {
    if (len % period != 0) continue;
    bool repeats = true;
    for (int t = period; t < len && repeats; ++t) repeats = w[t] == w[t - period];
    if (repeats) return len / period;
  }
  return 1;
}

bool is_irreducible(std::span<const Letter> w, int n) {
  int g = n;
  for (const Letter& l : w) g = std::gcd(g, l.index);
  return g == 1;
}

bool is_redundant(std::span<const Letter> w, int n) {
  const int len = static_cast<int>(w.size());
  if (len == 0) return false;
  // shift^s(w) equals rotate(target, r) forces s from position r; verify the rest.
  // target runs over w and its inverse. s == 0 hits are the identity relator
  // (target == w, r == 0 up to proper powers), never a distinct relator pair.
  for (int which = 0; which < 2; ++which) {
    auto target = [&](int t) -> Letter {
      t %= len;
      if (which == 0) return w[static_cast<size_t>(t)];
      const Letter& l = w[static_cast<size_t>(len - 1 - t)];
      return {l.index, -l.sign};
    };
    for (int r = 0; r < len; ++r) {
      if (target(r).sign != w[0].sign) continue;
      int s = target(r).index - w[0].index;
      s %= n;
      if (s < 0) s += n;
      if (s == 0) continue;
      bool match = true;
      for (int t = 1; t < len && match; ++t) {
        Letter want = target(r + t);
        match = want.sign == w[static_cast<size_t>(t)].sign &&
                want.index == (w[static_cast<size_t>(t)].index + s) % n;
      }
      if (match) return true;
    }
  }
  return false;
}

void subscript_multisets_span(std::span<const Letter> w, int n, SubscriptMultisets& out) {
  const size_t len = w.size();
  out.n = n;
  out.A.clear();
  out.B.clear();
  out.Q.clear();
  out.Qplus.clear();
  out.Qminus.clear();
  out.sigma = 0;
  for (size_t t = 0; t < len; ++t) {
    const Letter& c = w[t];
    const Letter& e = w[(t + 1) % len];
    out.sigma += c.sign;
    int fwd = e.index - c.index;
    if (fwd < 0) fwd += n;
    if (c.sign > 0 && e.sign > 0) {
      out.Qplus.push_back(fwd);
    } else if (c.sign > 0 && e.sign < 0) {
      out.A.push_back(fwd);
    } else if (c.sign < 0 && e.sign > 0) {
      out.B.push_back(fwd);
    } else {
      out.Qminus.push_back(fwd == 0 ? 0 : n - fwd);
    }
  }
  std::sort(out.A.begin(), out.A.end());
  std::sort(out.B.begin(), out.B.end());
  std::sort(out.Qplus.begin(), out.Qplus.end());
  std::sort(out.Qminus.begin(), out.Qminus.end());
  out.Q.resize(out.Qplus.size() + out.Qminus.size());
  std::merge(out.Qplus.begin(), out.Qplus.end(), out.Qminus.begin(), out.Qminus.end(),
             out.Q.begin());

  out.dA = n;
  for (int a : out.A) out.dA = std::gcd(out.dA, a);
  out.dB = n;
  for (int b : out.B) out.dB = std::gcd(out.dB, b);
  if (out.Q.empty()) {
    out.q0.reset();
    out.d.reset();
  } else {
    out.q0 = out.Q.front();
    int g = n;
    for (int a : out.A) g = std::gcd(g, a);
    for (int b : out.B) g = std::gcd(g, b);
    for (int q : out.Q) g = std::gcd(g, q - *out.q0);
    out.d = g;
  }
}

}  // namespace detail

}  // namespace starpoly
