#include "baxterlab/stats.hpp"

#include <algorithm>

namespace baxterlab {

std::vector<int> ltr_max_positions(const Permutation& w) {
  std::vector<int> out;
  int best = 0;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) > best) {
      best = w(i);
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> rtl_max_positions(const Permutation& w) {
  std::vector<int> out;
  int best = 0;
  for (int i = w.size(); i >= 1; --i) {
    if (w(i) > best) {
      best = w(i);
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> ltr_min_positions(const Permutation& w) {
  std::vector<int> out;
  int best = w.size() + 1;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) < best) {
      best = w(i);
      out.push_back(i);
    }
  }
  return out;
}

std::vector<int> rtl_min_positions(const Permutation& w) {
  std::vector<int> out;
  int best = w.size() + 1;
  for (int i = w.size(); i >= 1; --i) {
    if (w(i) < best) {
      best = w(i);
      out.push_back(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int descents(const Permutation& w) {
  int count = 0;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) ++count;
  }
  return count;
}

PermStats stats(const Permutation& w) {
  return PermStats{
      .ltr_max_positions = ltr_max_positions(w),
      .rtl_max_positions = rtl_max_positions(w),
      .ltr_min_positions = ltr_min_positions(w),
      .rtl_min_positions = rtl_min_positions(w),
      .descents = descents(w),
      .inverse_descents = descents(inverse(w)),
  };
}

}  // namespace baxterlab
