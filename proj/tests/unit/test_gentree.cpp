#include "doctest.h"

#include <set>
#include <sstream>

#include "baxterlab/errors.hpp"
#include "baxterlab/gentree.hpp"
#include "baxterlab/symmetry.hpp"

using namespace baxterlab;

namespace {

std::set<Permutation> level(const GenTree& t, std::size_t rank) {
  std::set<Permutation> out;
  for (std::size_t i : t.levels[rank]) out.insert(t.nodes[i].perm);
  return out;
}

std::set<Permutation> perms(std::initializer_list<const char*> texts) {
  std::set<Permutation> out;
  for (const char* t : texts) out.insert(parse_perm(t));
  return out;
}

}  // namespace

TEST_CASE("explicit tree examples") {
  const GenTree quarter = explicit_tree(TreeFamily::quarter, 2);
  CHECK(level(quarter, 0) == perms({"1"}));
  CHECK(level(quarter, 1) == perms({"25314", "41352"}));
  CHECK(level(quarter, 2) == perms({"294753618", "296357418", "349852167", "438951276", "672159834",
                                    "761258943", "814753692", "816357492"}));

  const GenTree even = explicit_tree(TreeFamily::half_even, 1);
  CHECK(level(even, 0) == std::set<Permutation>{Permutation{}});
  CHECK(level(even, 1) == perms({"12", "21"}));

  CHECK(explicit_tree(TreeFamily::baxter, 2).level_sizes() == std::vector<std::size_t>{1, 2, 6});
  CHECK(explicit_tree(TreeFamily::half_odd, 2).level_sizes() == std::vector<std::size_t>{1, 2, 8});
}

TEST_CASE("explicit tree structure") {
  const GenTree t = explicit_tree(TreeFamily::baxter, 4);
  CHECK(t.nodes[0].rank == 0);
  CHECK_FALSE(t.nodes[0].parent.has_value());
  for (std::size_t i = 1; i < t.nodes.size(); ++i) {
    const TreeNode& node = t.nodes[i];
    REQUIRE(node.parent.has_value());
    const TreeNode& parent = t.nodes[*node.parent];
    CHECK(parent.rank + 1 == node.rank);
    CHECK(node.perm.size() == node.rank + 1);
  }
  const auto path = t.path_to(t.levels[4].back());
  CHECK(path.size() == 5);
  CHECK(path.front() == Permutation{1});
}

TEST_CASE("explicit tree errors") {
  CHECK_THROWS_AS(explicit_tree(TreeFamily::baxter, 8, 1000), LimitError);
  CHECK_THROWS_AS(explicit_tree(TreeFamily::baxter, -1), ContractError);
}

TEST_CASE("node labels") {
  CHECK(node_label(parse_perm("31248756"), TreeFamily::baxter) == Label{3, 3});
  CHECK(node_label(Permutation{}, TreeFamily::half_even) == Label{0, 0});
  CHECK(node_label(parse_perm("25314"), TreeFamily::quarter) == Label{2, 0});
  CHECK(matching_rule(TreeFamily::half_odd) == RuleKind::half_odd);
  CHECK(tree_root(TreeFamily::half_even).empty());
  CHECK(parse_tree_family("quarter") == TreeFamily::quarter);
  CHECK_FALSE(parse_tree_family("half").has_value());
}

TEST_CASE("check_isomorphism examples") {
  CHECK(check_isomorphism(TreeFamily::baxter, succession_rule(RuleKind::baxter), 5).ok());
  CHECK(check_isomorphism(TreeFamily::quarter, succession_rule(RuleKind::quarter), 3).ok());
  CHECK(check_isomorphism(TreeFamily::half_odd, succession_rule(RuleKind::half_odd), 3).ok());
  CHECK(check_isomorphism(TreeFamily::half_even, succession_rule(RuleKind::half_even), 4).ok());
}

TEST_CASE("check_isomorphism reports mismatches against the wrong rule") {
  const IsomorphismReport r = check_isomorphism(TreeFamily::half_odd, succession_rule(RuleKind::baxter), 2);
  CHECK_FALSE(r.ok());
  REQUIRE_FALSE(r.mismatches.empty());
  CHECK_FALSE(describe(r.mismatches.front(), RuleKind::baxter).empty());
}

TEST_CASE("tree writers") {
  const GenTree t = explicit_tree(TreeFamily::half_even, 1);
  std::ostringstream lines, json;
  write_tree_lines(lines, t);
  write_tree_json(json, t);
  CHECK(lines.str() == "0\t()\t-\t(0,0)\n1\t21\t()\t(1,2)\n1\t12\t()\t(2,1)\n");
  int rows = 0;
  for (char c : json.str()) rows += c == '\n';
  CHECK(rows == 3);
}
