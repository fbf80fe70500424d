#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baxterlab/insertion.hpp"
#include "baxterlab/permutation.hpp"
#include "baxterlab/succession.hpp"

namespace baxterlab {

/// Trees built explicitly from permutations. The half-turn family splits by
/// parity of length; the even tree is rooted at the empty permutation.
enum class TreeFamily { baxter, half_even, half_odd, quarter };

std::string_view name(TreeFamily f);
std::optional<TreeFamily> parse_tree_family(std::string_view text);

Family base_family(TreeFamily f);
Permutation tree_root(TreeFamily f);

/// The succession rule whose abstract tree should match `f`.
RuleKind matching_rule(TreeFamily f);

/// Label of a node: (#LtR maxima, #RtL maxima) for pair rules, #LtR maxima
/// for the quarter rule.
Label node_label(const Permutation& w, TreeFamily f);

/// Children of a tree node in construction order.
std::vector<Permutation> tree_children(const Permutation& w, TreeFamily f);

struct TreeNode {
  Permutation perm;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  int rank = 0;
};

struct GenTree {
  TreeFamily family;
  std::vector<TreeNode> nodes;                 // nodes[0] is the root
  std::vector<std::vector<std::size_t>> levels;  // node indices per rank

  std::vector<std::size_t> level_sizes() const;
  /// Permutations from the root down to node `index`.
  std::vector<Permutation> path_to(std::size_t index) const;
};

inline constexpr std::size_t kDefaultNodeBudget = 2'000'000;

/// Builds ranks 0..depth. Throws LimitError, naming the budget, rather than
/// returning a truncated tree.
GenTree explicit_tree(TreeFamily family, int depth, std::size_t node_budget = kDefaultNodeBudget);

struct Mismatch {
  std::vector<Permutation> path;  // root .. offending node
  Label label;
  std::vector<Label> expected;  // from the rule, sorted
  std::vector<Label> actual;    // from the explicit children, sorted
};

struct IsomorphismReport {
  TreeFamily family;
  RuleKind rule;
  int depth = 0;
  std::size_t nodes_checked = 0;
  bool root_label_matches = true;
  std::vector<Mismatch> mismatches;

  bool ok() const { return root_label_matches && mismatches.empty(); }
};

/// Compares every non-leaf node's child-label multiset with the rule.
IsomorphismReport check_isomorphism(TreeFamily family, const SuccessionRule& rule, int depth,
                                    std::size_t node_budget = kDefaultNodeBudget);

/// `rank<TAB>perm<TAB>parent<TAB>label` per node, parent "-" for the root.
void write_tree_lines(std::ostream& os, const GenTree& tree);
/// One JSON object per node per line.
void write_tree_json(std::ostream& os, const GenTree& tree);

std::string describe(const Mismatch& m, RuleKind kind);

}  // namespace baxterlab
