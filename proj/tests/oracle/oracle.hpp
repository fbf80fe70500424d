#pragma once

// Brute-force references for the tests. Everything here works on plain
// vectors straight from the definitions and shares no code with the library.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Word = std::vector<int>;
using boost::multiprecision::cpp_int;

// Quadruple scan against the defining value conditions:
//   3-14-2: w_j < w_k < w_i < w_{j+1}
//   2-41-3: w_{j+1} < w_i < w_k < w_j
inline bool is_baxter(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      for (int k = j + 2; k < n; ++k) {
        const int a = w[i], b = w[j], c = w[j + 1], d = w[k];
        if (b < d && d < a && a < c) return false;
        if (c < a && a < d && d < b) return false;
      }
    }
  }
  return true;
}

inline std::vector<Word> all_words(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// w_i = j  implies  w_j = n+1-i.
inline bool quarter_fixed(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i) {
    if (w[static_cast<std::size_t>(w[static_cast<std::size_t>(i - 1)] - 1)] != n + 1 - i) return false;
  }
  return true;
}

// w_i = j  implies  w_{n+1-i} = n+1-j.
inline bool half_fixed(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i) {
    if (w[static_cast<std::size_t>(n - i)] != n + 1 - w[static_cast<std::size_t>(i - 1)]) return false;
  }
  return true;
}

inline bool fpf_involution(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int v = w[i];
    if (v == static_cast<int>(i) + 1 || w[static_cast<std::size_t>(v - 1)] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

// C_{m+1} = sum C_i C_{m-i}
inline cpp_int catalan(int m) {
  std::vector<cpp_int> c{1};
  for (int k = 1; k <= m; ++k) {
    cpp_int next = 0;
    for (int i = 0; i < k; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
    c.push_back(next);
  }
  return c[static_cast<std::size_t>(m)];
}

inline int count_descents(const Word& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

inline Word invert(const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return out;
}

template <typename Pred>
std::set<Word> filter(int n, Pred pred) {
  std::set<Word> out;
  for (const Word& w : all_words(n)) {
    if (pred(w)) out.insert(w);
  }
  return out;
}

}  // namespace oracle
