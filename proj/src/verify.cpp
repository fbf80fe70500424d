#include "baxterlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "baxterlab/errors.hpp"
#include "baxterlab/gentree.hpp"
#include "baxterlab/insertion.hpp"
#include "baxterlab/pattern.hpp"
#include "baxterlab/stats.hpp"

namespace baxterlab {

namespace {

const FamilySpec kBaxter{};

FamilySpec fixed_baxter(Symmetry s) { return FamilySpec{FamilySpec::Base::baxter, s, false}; }

// Accumulates one check. The first failure is kept as the witness.
class Check {
 public:
  explicit Check(std::string name) : result_{std::move(name), true, {}} {}

  void expect(bool ok, const std::function<std::string()>& witness) {
    ++cases_;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = witness();
    }
  }

  CheckResult finish(const std::string& scope) {
    if (result_.passed) result_.detail = scope + ", " + std::to_string(cases_) + " cases";
    return result_;
  }

 private:
  CheckResult result_;
  long long cases_ = 0;
};

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

std::vector<int> gap_indices(const std::vector<Gap>& gaps) {
  std::vector<int> out;
  for (Gap g : gaps) out.push_back(g.index);
  return out;
}

void for_each_baxter(int n, const BruteLimits& limits, const std::function<void(const Permutation&)>& visit) {
  for_each_member(n, kBaxter, visit, limits);
}

std::string scope_upto(int n) { return "n <= " + std::to_string(n); }

// --- rules -----------------------------------------------------------------

std::vector<CheckResult> rules_suite(int max_n, const BruteLimits& limits) {
  const int top = std::min(max_n, limits.full_scan);
  Check largest("largest-label insertion rule equals brute filter");
  Check smallest("smallest-label insertion rule equals brute filter");
  Check boundary("boundary insertion rule equals brute filter");
  Check closed("Baxter closed under removing largest/smallest/first/last");
  for (int n = 0; n <= top; ++n) {
    for_each_baxter(n, limits, [&](const Permutation& w) {
      std::vector<int> brute;
      for (int g = 0; g <= n; ++g) {
        if (is_baxter(insert_largest(w, Gap{g}))) brute.push_back(g);
      }
      const auto rule = gap_indices(admissible_largest_gaps(w));
      largest.expect(rule == brute, [&] { return to_string(w) + ": rule " + join(rule) + " brute " + join(brute); });

      brute.clear();
      for (int g = 0; g <= n; ++g) {
        if (is_baxter(insert_smallest(w, Gap{g}))) brute.push_back(g);
      }
      const auto small_rule = gap_indices(admissible_smallest_gaps(w));
      smallest.expect(small_rule == brute,
                      [&] { return to_string(w) + ": rule " + join(small_rule) + " brute " + join(brute); });

      for (Side side : {Side::front, Side::back}) {
        std::vector<int> labels;
        for (int j = 1; j <= n + 1; ++j) {
          if (is_baxter(insert_boundary(w, side, j))) labels.push_back(j);
        }
        const auto rule_labels = admissible_boundary_labels(w, side);
        boundary.expect(rule_labels == labels, [&] {
          return to_string(w) + (side == Side::front ? " front" : " back") + ": rule " + join(rule_labels) +
                 " brute " + join(labels);
        });
      }

      if (n >= 1) {
        for (Removal r : {Removal::largest, Removal::smallest, Removal::front, Removal::back}) {
          const Permutation parent = remove(w, r);
          closed.expect(is_baxter(parent), [&] { return to_string(w) + " -> " + to_string(parent); });
        }
      }
    });
  }

  // Identities hold for every permutation, Baxter or not.
  const int small = std::min(top, 7);
  Check roundtrip("remove inverts each insertion");
  Check conj_small("smallest insertion is largest insertion conjugated by rotate180");
  Check conj_end("appending j is largest insertion conjugated by inverse");
  for (int n = 0; n <= small; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      for (int g = 0; g <= n; ++g) {
        const Permutation up = insert_largest(w, Gap{g});
        roundtrip.expect(remove(up, Removal::largest) == w, [&] { return to_string(up); });
        const Permutation low = insert_smallest(w, Gap{g});
        roundtrip.expect(remove(low, Removal::smallest) == w, [&] { return to_string(low); });
        const Permutation via =
            apply_symmetry(insert_largest(apply_symmetry(w, Symmetry::rotate180), Gap{n - g}), Symmetry::rotate180);
        conj_small.expect(via == low, [&] { return to_string(w) + " gap " + std::to_string(g); });
      }
      for (int j = 1; j <= n + 1; ++j) {
        const Permutation front = insert_boundary(w, Side::front, j);
        roundtrip.expect(remove(front, Removal::front) == w, [&] { return to_string(front); });
        const Permutation back = insert_boundary(w, Side::back, j);
        roundtrip.expect(remove(back, Removal::back) == w, [&] { return to_string(back); });
        const Permutation via = inverse(insert_largest(inverse(w), Gap{j - 1}));
        conj_end.expect(via == back, [&] { return to_string(w) + " label " + std::to_string(j); });
      }
      return true;
    });
  }

  return {largest.finish(scope_upto(top)), smallest.finish(scope_upto(top)), boundary.finish(scope_upto(top)),
          closed.finish(scope_upto(top)), roundtrip.finish(scope_upto(small)), conj_small.finish(scope_upto(small)),
          conj_end.finish(scope_upto(small))};
}

// --- isomorphism -------------------------------------------------------------

std::vector<CheckResult> isomorphism_suite(int max_n) {
  struct Job {
    TreeFamily family;
    int depth;
  };
  const std::vector<Job> jobs = {
      {TreeFamily::baxter, std::clamp(max_n - 1, 0, 9)},  // sum of B(1..10) nodes
      {TreeFamily::half_even, std::max(0, max_n / 2)},
      {TreeFamily::half_odd, std::max(0, (max_n - 1) / 2)},
      {TreeFamily::quarter, std::max(0, (max_n - 1) / 4)},
  };
  std::vector<CheckResult> out;
  for (const Job& job : jobs) {
    const RuleKind kind = matching_rule(job.family);
    CheckResult r{"explicit " + std::string(name(job.family)) + " tree matches rule " + std::string(name(kind)),
                  true, {}};
    try {
      const IsomorphismReport report = check_isomorphism(job.family, succession_rule(kind), job.depth);
      r.passed = report.ok();
      r.detail = r.passed ? "depth " + std::to_string(job.depth) + ", " + std::to_string(report.nodes_checked) +
                                " nodes"
                          : describe(report.mismatches.front(), kind);
      if (r.passed) {
        const auto tree = explicit_tree(job.family, job.depth);
        const auto sizes = expand_rule(succession_rule(kind), job.depth);
        for (std::size_t rank = 0; rank < sizes.size(); ++rank) {
          if (BigInt(tree.levels[rank].size()) != sizes[rank]) {
            r.passed = false;
            r.detail = "rank " + std::to_string(rank) + ": tree " + std::to_string(tree.levels[rank].size()) +
                       " rule " + sizes[rank].str();
            break;
          }
        }
      }
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

// --- theorem -----------------------------------------------------------------

std::vector<CheckResult> theorem_suite(int max_n, const BruteLimits& limits) {
  std::vector<CheckResult> out;
  const int sym_top = std::min(max_n, limits.symmetric);

  CheckResult counts{"quarter-turn counts: formula = explicit tree = symmetric brute force", true, {}};
  Check left_is_right("quarter-turn fixed Baxter: #LtR maxima = #RtL maxima, cycles (i,j,n+1-i,n+1-j)");
  Check oracle("quarter-turn children equal symmetric-completion oracle");
  Check parent("quarter_turn_parent inverts quarter_turn_children");
  const int depth = std::max(0, (sym_top - 1) / 4);
  const GenTree tree = explicit_tree(TreeFamily::quarter, depth);
  std::vector<std::string> summary;
  for (int m = 0; m <= depth; ++m) {
    const int n = 4 * m + 1;
    std::set<Permutation> from_tree;
    for (std::size_t idx : tree.levels[static_cast<std::size_t>(m)]) from_tree.insert(tree.nodes[idx].perm);
    std::set<Permutation> from_brute;
    for_each_member(n, fixed_baxter(Symmetry::rotate90cw), [&](const Permutation& w) { from_brute.insert(w); },
                    limits);
    const BigInt formula = quarter_turn_count(n);
    const bool ok = BigInt(from_tree.size()) == formula && BigInt(from_brute.size()) == formula &&
                    from_tree == from_brute && from_tree.size() == tree.levels[static_cast<std::size_t>(m)].size();
    summary.push_back(formula.str());
    if (!ok && counts.passed) {
      counts.passed = false;
      counts.detail = "n = " + std::to_string(n) + ": formula " + formula.str() + ", tree " +
                      std::to_string(from_tree.size()) + ", brute " + std::to_string(from_brute.size());
    }
    for (const Permutation& w : from_brute) {
      left_is_right.expect(ltr_max_positions(w).size() == rtl_max_positions(w).size() && quarter_cycle_check(w),
                           [&] { return to_string(w); });
      if (n + 4 <= children_oracle_limit(Family::quarter)) {
        auto built = quarter_turn_children(w);
        std::sort(built.begin(), built.end());
        oracle.expect(built == children_oracle(w, Family::quarter), [&] { return to_string(w); });
        for (const auto& c : built) {
          parent.expect(quarter_turn_parent(c) == w, [&] { return to_string(c); });
        }
      }
    }
  }
  if (counts.passed) counts.detail = "n = 1,5,..: " + join(summary);
  out.push_back(std::move(counts));
  out.push_back(left_is_right.finish(scope_upto(sym_top)));
  out.push_back(oracle.finish("child length <= 13"));
  out.push_back(parent.finish("child length <= 13"));

  Check zeros("no quarter-turn fixed Baxter permutation unless n = 4m+1");
  for (int n = 1; n <= sym_top; ++n) {
    BigInt brute = 0;
    for_each_member(n, fixed_baxter(Symmetry::rotate90cw), [&](const Permutation&) { ++brute; }, limits);
    zeros.expect(n % 4 == 1 || (brute == 0 && quarter_turn_count(n) == 0),
                 [&] { return "n = " + std::to_string(n) + ": brute " + brute.str(); });
  }
  out.push_back(zeros.finish(scope_upto(sym_top)));

  const int full_top = std::min(max_n, std::min(limits.full_scan, 9));
  Check desc("Baxter: descents = inverse descents");
  for (int n = 1; n <= full_top; ++n) {
    for (const auto& [key, count] : stats_table(n, kBaxter, limits)) {
      desc.expect(key.first == key.second, [&, key = key] {
        return "n = " + std::to_string(n) + " has mass at (" + std::to_string(key.first) + "," +
               std::to_string(key.second) + ")";
      });
    }
  }
  out.push_back(desc.finish(scope_upto(full_top)));

  Check quad_rule("doubled Catalan rule gives 2^m C_m");
  const auto sizes = expand_rule(succession_rule(RuleKind::quarter), 30);
  for (int m = 0; m <= 30; ++m) {
    quad_rule.expect(sizes[static_cast<std::size_t>(m)] == (BigInt(1) << m) * catalan(m),
                     [&] { return "m = " + std::to_string(m); });
  }
  out.push_back(quad_rule.finish("m <= 30"));
  return out;
}

// --- formulas ----------------------------------------------------------------

std::vector<CheckResult> formulas_suite(int max_n, const BruteLimits& limits) {
  std::vector<CheckResult> out;
  const int full_top = std::min(max_n, limits.full_scan);
  Check baxter("Baxter closed form equals brute force");
  for (int n = 1; n <= full_top; ++n) {
    const BigInt formula = baxter_count(n);
    const BigInt brute = brute_count(n, kBaxter, limits);
    baxter.expect(formula == brute,
                  [&] { return "n = " + std::to_string(n) + ": " + formula.str() + " vs " + brute.str(); });
  }
  out.push_back(baxter.finish(scope_upto(full_top)));

  const int sym_top = std::min(max_n, limits.symmetric);
  Check fpf("fpf involution closed form equals brute force");
  for (int len = 2; len <= sym_top; len += 2) {
    const BigInt formula = fpf_involution_count(len / 2);
    const BigInt brute = brute_count(len, FamilySpec{FamilySpec::Base::baxter, std::nullopt, true}, limits);
    fpf.expect(formula == brute,
               [&] { return "length " + std::to_string(len) + ": " + formula.str() + " vs " + brute.str(); });
  }
  out.push_back(fpf.finish("length " + scope_upto(sym_top)));

  Check half("half-turn tree levels equal brute force");
  const int half_top = std::min(sym_top, 12);
  const GenTree even = explicit_tree(TreeFamily::half_even, half_top / 2);
  const GenTree odd = explicit_tree(TreeFamily::half_odd, std::max(0, (half_top - 1) / 2));
  for (int n = 0; n <= half_top; ++n) {
    const GenTree& t = n % 2 == 0 ? even : odd;
    const std::size_t rank = static_cast<std::size_t>(n / 2);
    const BigInt brute = brute_count(n, fixed_baxter(Symmetry::rotate180), limits);
    half.expect(BigInt(t.levels[rank].size()) == brute, [&] {
      return "n = " + std::to_string(n) + ": tree " + std::to_string(t.levels[rank].size()) + " brute " + brute.str();
    });
  }
  out.push_back(half.finish(scope_upto(half_top)));

  Check exact("closed-form divisions are exact");
  for (int n = 1; n <= 200; ++n) {
    bool ok = true;
    try {
      baxter_count(n);
      fpf_involution_count(n);
      catalan(n);
    } catch (const std::logic_error&) {
      ok = false;
    }
    exact.expect(ok, [&] { return "n = " + std::to_string(n); });
  }
  out.push_back(exact.finish("n <= 200"));

  Check rule("Baxter succession rule reproduces the closed form");
  const auto sizes = expand_rule(succession_rule(RuleKind::baxter), 29);
  for (int r = 0; r <= 29; ++r) {
    rule.expect(sizes[static_cast<std::size_t>(r)] == baxter_count(r + 1), [&] { return "rank " + std::to_string(r); });
  }
  out.push_back(rule.finish("rank <= 29"));
  return out;
}

}  // namespace

std::string_view name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::rules: return "rules";
    case Suite::isomorphism: return "isomorphism";
    case Suite::theorem: return "theorem";
    case Suite::formulas: return "formulas";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view text) {
  for (Suite s : {Suite::all, Suite::rules, Suite::isomorphism, Suite::theorem, Suite::formulas}) {
    if (name(s) == text) return s;
  }
  return std::nullopt;
}

std::vector<CheckResult> run_suite(Suite suite, int max_n, const BruteLimits& limits) {
  if (max_n < 1) throw ContractError("max-n must be >= 1");
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> part) {
    for (auto& r : part) out.push_back(std::move(r));
  };
  if (suite == Suite::all || suite == Suite::formulas) append(formulas_suite(max_n, limits));
  if (suite == Suite::all || suite == Suite::rules) append(rules_suite(max_n, limits));
  if (suite == Suite::all || suite == Suite::isomorphism) append(isomorphism_suite(max_n));
  if (suite == Suite::all || suite == Suite::theorem) append(theorem_suite(max_n, limits));
  return out;
}

}  // namespace baxterlab
