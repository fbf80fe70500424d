#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baxterlab/permutation.hpp"
#include "baxterlab/succession.hpp"
#include "baxterlab/symmetry.hpp"

namespace baxterlab {

// Closed forms. Each throws ContractError on out-of-range arguments and
// std::logic_error if a division that must be exact leaves a remainder.

BigInt binomial(int n, int k);

/// Number of Baxter permutations of length n >= 1, summed one descent class
/// at a time; every summand is checked to divide exactly.
BigInt baxter_count(int n);

BigInt catalan(int m);

/// 2^m C_m when n = 4m+1, zero otherwise.
BigInt quarter_turn_count(int n);

/// b_n = 3 * 2^(n-1) / ((n+1)(n+2)) * binom(2n, n): fixed-point-free
/// involutive Baxter permutations of length 2n.
BigInt fpf_involution_count(int n);

/// A family of permutations of one length: all permutations or Baxter ones,
/// optionally restricted to fixed points of a symmetry and/or to
/// fixed-point-free involutions.
struct FamilySpec {
  enum class Base { all, baxter };
  Base base = Base::baxter;
  std::optional<Symmetry> symmetry;
  bool fpf_involution = false;

  bool contains(const Permutation& w) const;
  std::string describe() const;
};

struct BruteLimits {
  int full_scan = 10;  // max n for a full S_n scan
  int symmetric = 16;  // max n for orbit-completion generators

  /// Defaults, with full_scan overridden by BAXTERLAB_BRUTE_LIMIT if set.
  static BruteLimits from_environment();
};

/// Generates exactly the permutations of length n fixed by `s`, building
/// them orbit by orbit. Supports rotate90cw, rotate90ccw, rotate180 and
/// inverse; returns false for other symmetries.
bool for_each_fixed_permutation(int n, Symmetry s, const std::function<void(const Permutation&)>& visit);

/// Every fixed-point-free involution of length n (n even), as perfect
/// matchings.
void for_each_fpf_involution(int n, const std::function<void(const Permutation&)>& visit);

/// Visits every member of `family` of length n, in a deterministic order.
/// Symmetric families use orbit completion; everything else is a full
/// lexicographic S_n scan. Throws LimitError when n exceeds the matching
/// limit.
void for_each_member(int n, const FamilySpec& family, const std::function<void(const Permutation&)>& visit,
                     const BruteLimits& limits = {});

/// Exhaustive count. Full scans may be split by first entry over `jobs`
/// threads.
BigInt brute_count(int n, const FamilySpec& family, const BruteLimits& limits = {}, int jobs = 1);

/// Joint distribution of (descents, inverse descents) over the family.
using StatsTable = std::map<std::pair<int, int>, BigInt>;
StatsTable stats_table(int n, const FamilySpec& family, const BruteLimits& limits = {});

struct CountRow {
  int n = 0;
  BigInt count;
  std::string method;  // formula | tree | brute
};

struct CountTable {
  std::vector<CountRow> rows;

  /// True iff every n has a single count across all methods run for it.
  bool consistent() const;
};

void write_csv(std::ostream& os, const CountTable& table);
void write_json(std::ostream& os, const CountTable& table);

}  // namespace baxterlab
