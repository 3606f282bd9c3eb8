#include "starpoly/difference_sets.hpp"

#include <stdexcept>

namespace starpoly {

namespace {

int mod(int x, int n) {
  const int r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool is_perfect_difference_set(std::span<const int> D, int k) {
  if (k < 2) throw std::invalid_argument("difference set order must be at least 2");
  if (static_cast<int>(D.size()) != k)
    throw std::invalid_argument("difference set has wrong size for its order");

  const int N = k * k - k + 1;
  std::vector<int> count(static_cast<size_t>(N), 0);
  for (size_t i = 0; i < D.size(); ++i)
    for (size_t j = 0; j < D.size(); ++j) {
      if (i == j) continue;
      ++count[static_cast<size_t>(mod(D[i] - D[j], N))];
    }
  if (count[0] != 0) return false;  // two entries collide mod N
  for (int r = 1; r < N; ++r)
    if (count[static_cast<size_t>(r)] != 1) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_perfect_difference_sets(int k) {
  if (k < 2 || k > 6) throw std::invalid_argument("enumeration supports 2 <= k <= 6");

  const int N = k * k - k + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  std::vector<int> used(static_cast<size_t>(N), 0);  // used[d]: difference d already hit

  // Ascending choice gives lexicographic output; every partial difference
  // multiset must stay repeat-free.
  auto extend = [&](auto&& self, int low) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      out.push_back(chosen);
      return;
    }
    for (int cand = low; cand < N; ++cand) {
      // Mark while checking: the two differences one pair contributes can
      // also collide with each other, not just with earlier pairs.
      size_t marked = 0;
      bool ok = true;
      for (size_t t = 0; t < chosen.size(); ++t) {
        const int d = mod(cand - chosen[t], N);
        if (used[static_cast<size_t>(d)] || used[static_cast<size_t>(N - d)]) {
          ok = false;
          break;
        }
        used[static_cast<size_t>(d)] = used[static_cast<size_t>(N - d)] = 1;
        ++marked;
      }
      if (ok) {
        chosen.push_back(cand);
        self(self, cand + 1);
        chosen.pop_back();
      }
      for (size_t t = 0; t < marked; ++t) {
        const int d = mod(cand - chosen[t], N);
        used[static_cast<size_t>(d)] = used[static_cast<size_t>(N - d)] = 0;
      }
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace starpoly
