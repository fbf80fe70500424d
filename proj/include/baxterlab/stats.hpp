#pragma once

#include <vector>

#include "baxterlab/permutation.hpp"

namespace baxterlab {

/// Record positions (1-indexed, ascending) and descent counts of a
/// permutation. A left-to-right maximum is an entry larger than everything
/// before it; the other three kinds are defined the same way.
struct PermStats {
  std::vector<int> ltr_max_positions;
  std::vector<int> rtl_max_positions;
  std::vector<int> ltr_min_positions;
  std::vector<int> rtl_min_positions;
  int descents = 0;
  int inverse_descents = 0;
};

PermStats stats(const Permutation& w);

std::vector<int> ltr_max_positions(const Permutation& w);
std::vector<int> rtl_max_positions(const Permutation& w);
std::vector<int> ltr_min_positions(const Permutation& w);
std::vector<int> rtl_min_positions(const Permutation& w);
int descents(const Permutation& w);

}  // namespace baxterlab
