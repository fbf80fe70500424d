#include "baxterlab/gentree.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

#include "baxterlab/errors.hpp"
#include "baxterlab/stats.hpp"

namespace baxterlab {

std::string_view name(TreeFamily f) {
  switch (f) {
    case TreeFamily::baxter: return "baxter";
    case TreeFamily::half_even: return "half_even";
    case TreeFamily::half_odd: return "half_odd";
    case TreeFamily::quarter: return "quarter";
  }
  return "?";
}

std::optional<TreeFamily> parse_tree_family(std::string_view text) {
  for (TreeFamily f : {TreeFamily::baxter, TreeFamily::half_even, TreeFamily::half_odd, TreeFamily::quarter}) {
    if (name(f) == text) return f;
  }
  return std::nullopt;
}

Family base_family(TreeFamily f) {
  switch (f) {
    case TreeFamily::baxter: return Family::baxter;
    case TreeFamily::half_even:
    case TreeFamily::half_odd: return Family::half;
    case TreeFamily::quarter: return Family::quarter;
  }
  return Family::baxter;
}

Permutation tree_root(TreeFamily f) {
  return f == TreeFamily::half_even ? Permutation{} : Permutation{1};
}

RuleKind matching_rule(TreeFamily f) {
  switch (f) {
    case TreeFamily::baxter: return RuleKind::baxter;
    case TreeFamily::half_even: return RuleKind::half_even;
    case TreeFamily::half_odd: return RuleKind::half_odd;
    case TreeFamily::quarter: return RuleKind::quarter;
  }
  return RuleKind::baxter;
}

Label node_label(const Permutation& w, TreeFamily f) {
  const int ltr = static_cast<int>(ltr_max_positions(w).size());
  if (f == TreeFamily::quarter) return {ltr, 0};
  return {ltr, static_cast<int>(rtl_max_positions(w).size())};
}

std::vector<Permutation> tree_children(const Permutation& w, TreeFamily f) {
  switch (f) {
    case TreeFamily::baxter: {
      std::vector<Permutation> out;
      for (Gap g : admissible_largest_gaps(w)) out.push_back(insert_largest(w, g));
      return out;
    }
    case TreeFamily::half_even:
    case TreeFamily::half_odd: return half_turn_children(w);
    case TreeFamily::quarter: return quarter_turn_children(w);
  }
  return {};
}

std::vector<std::size_t> GenTree::level_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels) out.push_back(level.size());
  return out;
}

std::vector<Permutation> GenTree::path_to(std::size_t index) const {
  std::vector<Permutation> path;
  for (std::optional<std::size_t> at = index; at; at = nodes[*at].parent) path.push_back(nodes[*at].perm);
  std::reverse(path.begin(), path.end());
  return path;
}

GenTree explicit_tree(TreeFamily family, int depth, std::size_t node_budget) {
  if (depth < 0) throw ContractError("depth must be >= 0");
  GenTree tree{family, {}, {}};
  tree.nodes.push_back(TreeNode{tree_root(family), std::nullopt, {}, 0});
  tree.levels.push_back({0});

  for (int rank = 1; rank <= depth; ++rank) {
    std::vector<std::size_t> level;
    for (std::size_t parent : tree.levels.back()) {
      for (Permutation& child : tree_children(tree.nodes[parent].perm, family)) {
        if (tree.nodes.size() >= node_budget) {
          throw LimitError("explicit " + std::string(name(family)) + " tree exceeds node budget of " +
                           std::to_string(node_budget) + " at rank " + std::to_string(rank));
        }
        const std::size_t index = tree.nodes.size();
        tree.nodes.push_back(TreeNode{std::move(child), parent, {}, rank});
        tree.nodes[parent].children.push_back(index);
        level.push_back(index);
      }
    }
    tree.levels.push_back(std::move(level));
  }
  return tree;
}

IsomorphismReport check_isomorphism(TreeFamily family, const SuccessionRule& rule, int depth,
                                    std::size_t node_budget) {
  const GenTree tree = explicit_tree(family, depth, node_budget);
  IsomorphismReport report{family, rule.kind, depth, tree.nodes.size(), true, {}};
  report.root_label_matches = node_label(tree.nodes[0].perm, family) == rule.root;
  if (!report.root_label_matches) {
    report.mismatches.push_back(
        Mismatch{{tree.nodes[0].perm}, node_label(tree.nodes[0].perm, family), {rule.root}, {}});
  }

  // Leaves on the last rank have no constructed children to compare.
  for (std::size_t rank = 0; rank + 1 < tree.levels.size(); ++rank) {
    for (std::size_t index : tree.levels[rank]) {
      const TreeNode& node = tree.nodes[index];
      const Label label = node_label(node.perm, family);
      std::vector<Label> expected = rule_children(rule, label);
      std::vector<Label> actual;
      for (std::size_t c : node.children) actual.push_back(node_label(tree.nodes[c].perm, family));
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      if (expected != actual) {
        report.mismatches.push_back(Mismatch{tree.path_to(index), label, std::move(expected), std::move(actual)});
      }
    }
  }
  return report;
}

void write_tree_lines(std::ostream& os, const GenTree& tree) {
  const RuleKind rule = matching_rule(tree.family);
  for (const auto& level : tree.levels) {
    for (std::size_t index : level) {
      const TreeNode& node = tree.nodes[index];
      os << node.rank << '\t' << to_string(node.perm) << '\t'
         << (node.parent ? to_string(tree.nodes[*node.parent].perm) : std::string("-")) << '\t'
         << to_string(node_label(node.perm, tree.family), rule) << '\n';
    }
  }
}

void write_tree_json(std::ostream& os, const GenTree& tree) {
  const RuleKind rule = matching_rule(tree.family);
  for (const auto& level : tree.levels) {
    for (std::size_t index : level) {
      const TreeNode& node = tree.nodes[index];
      nlohmann::json j;
      j["rank"] = node.rank;
      j["perm"] = to_string(node.perm);
      j["parent"] = node.parent ? nlohmann::json(to_string(tree.nodes[*node.parent].perm)) : nlohmann::json(nullptr);
      j["label"] = to_string(node_label(node.perm, tree.family), rule);
      os << j.dump() << '\n';
    }
  }
}

std::string describe(const Mismatch& m, RuleKind kind) {
  auto join = [&](const std::vector<Label>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ' ';
      out += to_string(labels[i], kind);
    }
    return out + "]";
  };
  std::string path;
  for (const auto& p : m.path) {
    if (!path.empty()) path += " > ";
    path += to_string(p);
  }
  return "at " + path + " label " + to_string(m.label, kind) + ": rule " + join(m.expected) + " vs tree " +
         join(m.actual);
}

}  // namespace baxterlab
