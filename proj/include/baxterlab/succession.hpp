#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace baxterlab {

using BigInt = boost::multiprecision::cpp_int;

enum class RuleKind { catalan, baxter, half_even, half_odd, quarter };

std::string_view name(RuleKind kind);
std::optional<RuleKind> parse_rule_kind(std::string_view text);

/// Node label of a succession rule. Pair rules (baxter, half_*) use both
/// fields as (#left-to-right maxima, #right-to-left maxima); single-valued
/// rules (catalan, quarter) use `first` only and keep `second` at 0.
struct Label {
  int first = 0;
  int second = 0;
  auto operator<=>(const Label&) const = default;
};

/// Root label plus child map. Rules:
///   catalan    root 2,     k+1   -> 2, 3, ..., k+2
///   baxter     root (1,1), (i,j) -> (1,j+1)..(i,j+1), (i+1,j)..(i+1,1)
///   half_even  root (0,0), (i,j) -> (1,j+2), (2,j+1)..(i,j+1),
///   half_odd   root (1,1)            (i+1,j)..(i+1,2), (i+2,1)
///   quarter    root 1,     i+1   -> 2, 2, 3, 3, ..., i+2, i+2
struct SuccessionRule {
  RuleKind kind;
  Label root;
  std::function<std::vector<Label>(const Label&)> children_of;
};

SuccessionRule succession_rule(RuleKind kind);

bool is_pair_rule(RuleKind kind);

/// Throws ContractError for labels the rule can never produce.
std::vector<Label> rule_children(const SuccessionRule& rule, const Label& label);

/// Number of nodes at ranks 0..depth. Propagates label multiplicities level
/// by level rather than visiting nodes.
std::vector<BigInt> expand_rule(const SuccessionRule& rule, int depth);

std::string to_string(const Label& label, RuleKind kind);

}  // namespace baxterlab
