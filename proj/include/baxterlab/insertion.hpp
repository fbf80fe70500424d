#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "baxterlab/permutation.hpp"

namespace baxterlab {

/// A slot between entries of a host of length n: gap g sits between
/// positions g and g+1, so gap 0 is the front and gap n the end.
struct Gap {
  int index = 0;
  auto operator<=>(const Gap&) const = default;
};

enum class Side { front, back };
enum class Removal { largest, smallest, front, back };

/// The permutation families that carry a generating tree here.
enum class Family { baxter, half, quarter };

std::string_view name(Family f);

/// Inserts n+1 at gap g.
Permutation insert_largest(const Permutation& w, Gap g);

/// Shifts every label up by one and places 1 at gap g.
Permutation insert_smallest(const Permutation& w, Gap g);

/// Shifts labels >= `label` up by one and places `label` at the front or
/// back. `label` must lie in 1..n+1.
Permutation insert_boundary(const Permutation& w, Side side, int label);

/// Deletes the named entry and restandardizes; inverse of the matching
/// insertion. Throws ContractError on the empty permutation.
Permutation remove(const Permutation& w, Removal which);

/// Gaps where n+1 can go and keep w Baxter: left of every left-to-right
/// maximum and right of every right-to-left maximum.
std::vector<Gap> admissible_largest_gaps(const Permutation& w);

/// Gaps where a new 1 can go: left of every left-to-right minimum and right
/// of every right-to-left minimum.
std::vector<Gap> admissible_smallest_gaps(const Permutation& w);

/// Labels j for which insert_boundary(w, side, j) stays Baxter.
///
/// Appending j is inverse(insert_largest(inverse(w), Gap{j-1})), so j is
/// admissible at the back iff every label below j sits left of j, or every
/// label above j-1 sits left of j-1. The front rule is the mirror image.
std::vector<int> admissible_boundary_labels(const Permutation& w, Side side);

/// Children of a 180-degree-fixed Baxter w in the half-turn tree, one per
/// admissible largest gap, in gap order. Each child has length n+2.
std::vector<Permutation> half_turn_children(const Permutation& w);

/// Children of a 90-degree-fixed Baxter w (n = 4m+1) in the quarter-turn
/// tree, one per admissible largest gap, in gap order. Each child has
/// length n+4 and adds the 4-cycle (1, a, n+4, n+5-a).
std::vector<Permutation> quarter_turn_children(const Permutation& w);

/// Removes the largest, smallest, first and last entries.
Permutation quarter_turn_parent(const Permutation& w);

/// Family-specific parent: one removal for baxter, two for half, four for
/// quarter.
Permutation family_parent(const Permutation& w, Family family);

/// True iff w belongs to the family (Baxter plus the family's symmetry).
bool in_family(const Permutation& w, Family family);

/// Length added per tree level: 1, 2 or 4.
int family_step(Family family);

/// Largest child length children_oracle will construct for each family.
int children_oracle_limit(Family family);

/// Brute-force children: every family member of the next length whose
/// family_parent is w, found by exhaustive construction and filtering.
/// Sorted lexicographically. Throws LimitError past children_oracle_limit.
std::vector<Permutation> children_oracle(const Permutation& w, Family family);

}  // namespace baxterlab
