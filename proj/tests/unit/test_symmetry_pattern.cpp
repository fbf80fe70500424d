#include "doctest.h"

#include <map>
#include <utility>

#include "baxterlab/errors.hpp"
#include "baxterlab/pattern.hpp"
#include "baxterlab/stats.hpp"
#include "baxterlab/symmetry.hpp"
#include "oracle/oracle.hpp"

using namespace baxterlab;

namespace {

oracle::Word word(const Permutation& w) { return {w.labels().begin(), w.labels().end()}; }

// Rotates the set of matrix cells (row i, column w_i) a quarter turn
// clockwise k times and reads the permutation back off the rows.
Permutation rotate_cells(const Permutation& w, int k) {
  const int n = w.size();
  std::map<int, int> cells;
  for (int r = 1; r <= n; ++r) cells[r] = w(r);
  for (int step = 0; step < k; ++step) {
    std::map<int, int> next;
    for (auto [r, c] : cells) next[c] = n + 1 - r;
    cells = std::move(next);
  }
  std::vector<int> out;
  for (auto [r, c] : cells) out.push_back(c);
  return Permutation(std::move(out));
}

}  // namespace

TEST_CASE("symmetry examples") {
  const Permutation w = parse_perm("25314");
  CHECK(apply_symmetry(w, Symmetry::rotate90cw) == w);
  CHECK(apply_symmetry(w, Symmetry::identity) == w);
  CHECK(apply_symmetry(parse_perm("41352"), Symmetry::inverse) == w);
  CHECK(is_fixed(parse_perm("41352"), Symmetry::rotate90cw));
  CHECK_FALSE(is_fixed(parse_perm("12"), Symmetry::rotate90cw));
  CHECK(is_fixed(parse_perm("2143"), Symmetry::rotate180));
  CHECK(apply_symmetry(Permutation{}, Symmetry::rotate90cw).empty());
}

TEST_CASE("symmetry names round trip") {
  for (Symmetry s : kAllSymmetries) CHECK(parse_symmetry(name(s)) == s);
  CHECK_FALSE(parse_symmetry("rotate45").has_value());
}

TEST_CASE("rotations agree with the cell oracle") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      CHECK(apply_symmetry(w, Symmetry::rotate90cw) == rotate_cells(w, 1));
      CHECK(apply_symmetry(w, Symmetry::rotate180) == rotate_cells(w, 2));
      CHECK(apply_symmetry(w, Symmetry::rotate90ccw) == rotate_cells(w, 3));
      CHECK(apply_symmetry(w, Symmetry::reverse) == reverse(w));
      CHECK(apply_symmetry(w, Symmetry::complement) == complement(w));
      CHECK(apply_symmetry(w, Symmetry::inverse) == inverse(w));
      CHECK(apply_symmetry(w, Symmetry::antidiagonal) == reverse(complement(inverse(w))));
      CHECK(is_fixed(w, Symmetry::rotate90cw) == oracle::quarter_fixed(word(w)));
      CHECK(is_fixed(w, Symmetry::rotate180) == oracle::half_fixed(word(w)));
      return true;
    });
  }
}

TEST_CASE("dihedral closure preserves Baxter") {
  for_each_permutation(7, [](const Permutation& w) {
    const bool bax = is_baxter(w);
    for (Symmetry s : kAllSymmetries) CHECK(is_baxter(apply_symmetry(w, s)) == bax);
    return true;
  });
}

TEST_CASE("quarter-turn fixed points have length 0 or 1 mod 4") {
  for (int n = 1; n <= 9; ++n) {
    for_each_permutation(n, [n](const Permutation& w) {
      if (is_fixed(w, Symmetry::rotate90cw)) {
        CHECK((n % 4 == 0 || n % 4 == 1));
        if (is_baxter(w)) {
          CHECK(n % 4 == 1);
          CHECK(quarter_cycle_check(w));
          CHECK(ltr_max_positions(w).size() == rtl_max_positions(w).size());
        }
      }
      return true;
    });
  }
}

TEST_CASE("quarter_cycle_check") {
  CHECK(quarter_cycle_check(parse_perm("25314")));
  CHECK(quarter_cycle_check(Permutation{1}));
  CHECK(quarter_cycle_check(parse_perm("296357418")));
  CHECK_THROWS_AS(quarter_cycle_check(parse_perm("12")), ContractError);
}

TEST_CASE("vincular pattern parsing") {
  const VincularPattern p = VincularPattern::parse("3-14-2");
  CHECK(p.pattern() == Permutation{3, 1, 4, 2});
  CHECK(p.adjacent_pairs() == std::set<int>{2});
  CHECK(p.notation() == "3-14-2");
  CHECK(pattern_2_41_3().notation() == "2-41-3");
  CHECK_THROWS(VincularPattern::parse("3--142"));
  CHECK_THROWS(VincularPattern::parse("3-1x-2"));
}

TEST_CASE("vincular occurrence examples") {
  using Occ = std::vector<Occurrence>;
  CHECK(vincular_occurrences(parse_perm("2413"), pattern_2_41_3()) == Occ{{1, 2, 3, 4}});
  CHECK(vincular_occurrences(parse_perm("1234"), pattern_3_14_2()).empty());
  CHECK(vincular_occurrences(parse_perm("3142"), pattern_3_14_2()) == Occ{{1, 2, 3, 4}});
  // 41352 holds 3142 classically as 4,1,5,2 but the 1 and 5 are not adjacent.
  CHECK(vincular_occurrences(parse_perm("41352"), pattern_3_14_2()).empty());
  CHECK(vincular_occurrences(parse_perm("31524"), pattern_3_14_2()) == Occ{{1, 2, 3, 4}});
}

TEST_CASE("is_baxter examples") {
  CHECK_FALSE(is_baxter(parse_perm("2413")));
  CHECK_FALSE(is_baxter(parse_perm("3142")));
  CHECK(is_baxter(parse_perm("41352")));
  CHECK(is_baxter(Permutation{}));
}

TEST_CASE("is_baxter agrees with the quadruple oracle and the generic matcher") {
  for (int n = 0; n <= 8; ++n) {
    for_each_permutation(n, [](const Permutation& w) {
      const bool fast = is_baxter(w);
      CHECK(fast == oracle::is_baxter(word(w)));
      if (w.size() <= 6) {
        const bool generic = vincular_occurrences(w, pattern_3_14_2()).empty() &&
                             vincular_occurrences(w, pattern_2_41_3()).empty();
        CHECK(fast == generic);
      }
      return true;
    });
  }
}
