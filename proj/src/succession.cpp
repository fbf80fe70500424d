#include "baxterlab/succession.hpp"

#include <array>
#include <map>

#include "baxterlab/errors.hpp"

namespace baxterlab {

namespace {

std::vector<Label> catalan_children(const Label& l) {
  std::vector<Label> out;
  for (int c = 2; c <= l.first + 1; ++c) out.push_back({c, 0});
  return out;
}

std::vector<Label> baxter_children(const Label& l) {
  const auto [i, j] = std::array{l.first, l.second};
  std::vector<Label> out;
  for (int k = 1; k <= i; ++k) out.push_back({k, j + 1});
  for (int k = j; k >= 1; --k) out.push_back({i + 1, k});
  return out;
}

std::vector<Label> half_children(const Label& l) {
  const auto [i, j] = std::array{l.first, l.second};
  std::vector<Label> out{{1, j + 2}};
  for (int k = 2; k <= i; ++k) out.push_back({k, j + 1});
  for (int k = j; k >= 2; --k) out.push_back({i + 1, k});
  out.push_back({i + 2, 1});
  return out;
}

std::vector<Label> quarter_children(const Label& l) {
  std::vector<Label> out;
  for (int c = 2; c <= l.first + 1; ++c) {
    out.push_back({c, 0});
    out.push_back({c, 0});
  }
  return out;
}

bool well_formed(RuleKind kind, const Label& l) {
  switch (kind) {
    case RuleKind::catalan: return l.first >= 2 && l.second == 0;
    case RuleKind::quarter: return l.first >= 1 && l.second == 0;
    case RuleKind::baxter: return l.first >= 1 && l.second >= 1;
    case RuleKind::half_even:
      return (l.first == 0 && l.second == 0) || (l.first >= 1 && l.second >= 1);
    case RuleKind::half_odd: return l.first >= 1 && l.second >= 1;
  }
  return false;
}

}  // namespace

std::string_view name(RuleKind kind) {
  switch (kind) {
    case RuleKind::catalan: return "catalan";
    case RuleKind::baxter: return "baxter";
    case RuleKind::half_even: return "half_even";
    case RuleKind::half_odd: return "half_odd";
    case RuleKind::quarter: return "quarter";
  }
  return "?";
}

std::optional<RuleKind> parse_rule_kind(std::string_view text) {
  for (RuleKind k : {RuleKind::catalan, RuleKind::baxter, RuleKind::half_even, RuleKind::half_odd,
                     RuleKind::quarter}) {
    if (name(k) == text) return k;
  }
  return std::nullopt;
}

bool is_pair_rule(RuleKind kind) {
  return kind == RuleKind::baxter || kind == RuleKind::half_even || kind == RuleKind::half_odd;
}

SuccessionRule succession_rule(RuleKind kind) {
  switch (kind) {
    case RuleKind::catalan: return {kind, {2, 0}, catalan_children};
    case RuleKind::baxter: return {kind, {1, 1}, baxter_children};
    case RuleKind::half_even: return {kind, {0, 0}, half_children};
    case RuleKind::half_odd: return {kind, {1, 1}, half_children};
    case RuleKind::quarter: return {kind, {1, 0}, quarter_children};
  }
  throw ContractError("unknown rule");
}

std::vector<Label> rule_children(const SuccessionRule& rule, const Label& label) {
  if (!well_formed(rule.kind, label)) {
    throw ContractError("label " + to_string(label, rule.kind) + " is malformed for rule " +
                        std::string(name(rule.kind)));
  }
  return rule.children_of(label);
}

std::vector<BigInt> expand_rule(const SuccessionRule& rule, int depth) {
  if (depth < 0) throw ContractError("depth must be >= 0");
  std::vector<BigInt> sizes;
  std::map<Label, BigInt> level{{rule.root, BigInt(1)}};
  for (int rank = 0;; ++rank) {
    BigInt total = 0;
    for (const auto& [label, count] : level) total += count;
    sizes.push_back(total);
    if (rank == depth) break;

    std::map<Label, BigInt> next;
    for (const auto& [label, count] : level) {
      for (const Label& child : rule_children(rule, label)) next[child] += count;
    }
    level = std::move(next);
  }
  return sizes;
}

std::string to_string(const Label& label, RuleKind kind) {
  if (is_pair_rule(kind)) {
    return "(" + std::to_string(label.first) + "," + std::to_string(label.second) + ")";
  }
  return std::to_string(label.first);
}

}  // namespace baxterlab
