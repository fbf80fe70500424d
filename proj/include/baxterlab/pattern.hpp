#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "baxterlab/permutation.hpp"

namespace baxterlab {

/// A classical pattern plus adjacency constraints. Index `a` in
/// `adjacent_pairs` (1-based) requires pattern positions a and a+1 to land on
/// neighbouring host positions. Written in dash notation: "3-14-2" is the
/// pattern 3142 with positions 2 and 3 adjacent.
class VincularPattern {
 public:
  VincularPattern(Permutation pattern, std::set<int> adjacent_pairs);

  /// Parses dash notation ("2-41-3"). Single-digit labels only.
  static VincularPattern parse(std::string_view text);

  const Permutation& pattern() const { return pattern_; }
  const std::set<int>& adjacent_pairs() const { return adjacent_; }
  std::string notation() const;

 private:
  Permutation pattern_;
  std::set<int> adjacent_;
};

/// The two patterns whose avoidance defines Baxter permutations.
const VincularPattern& pattern_3_14_2();
const VincularPattern& pattern_2_41_3();

using Occurrence = std::vector<int>;  // 1-indexed host positions, increasing

/// Every occurrence of `p` in `w`, in lexicographic order of positions.
/// Exhaustive scan, O(n^k) for a pattern of length k.
std::vector<Occurrence> vincular_occurrences(const Permutation& w, const VincularPattern& p);

/// True iff w avoids both 3-14-2 and 2-41-3. The empty permutation is Baxter.
bool is_baxter(const Permutation& w);

}  // namespace baxterlab
