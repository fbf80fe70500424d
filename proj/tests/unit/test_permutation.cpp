#include "doctest.h"

#include <set>
#include <sstream>
#include <unordered_set>

#include "baxterlab/errors.hpp"
#include "baxterlab/permutation.hpp"
#include "baxterlab/stats.hpp"
#include "oracle/oracle.hpp"

using namespace baxterlab;

namespace {

oracle::Word word(const Permutation& w) { return {w.labels().begin(), w.labels().end()}; }

}  // namespace

TEST_CASE("parse_perm accepts compact and list forms") {
  CHECK(parse_perm("41352") == Permutation{4, 1, 3, 5, 2});
  CHECK(parse_perm("1") == Permutation{1});
  CHECK(parse_perm("2,4,1,3") == Permutation{2, 4, 1, 3});
  CHECK(parse_perm("2 4 1 3") == Permutation{2, 4, 1, 3});
  CHECK(parse_perm("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK(parse_perm("").empty());
  CHECK(parse_perm("()").empty());
}

TEST_CASE("parse_perm rejects malformed input") {
  CHECK_THROWS_AS(parse_perm("1224"), ParseError);
  CHECK_THROWS_AS(parse_perm("12a"), ParseError);
  CHECK_THROWS_AS(parse_perm("0,1"), ParseError);
  CHECK_THROWS_AS(parse_perm("1,3"), ParseError);
  CHECK_THROWS_AS(parse_perm("1,,2"), ParseError);
}

TEST_CASE("constructor validates labels") {
  CHECK_THROWS_AS(Permutation({1, 1}), ContractError);
  CHECK_THROWS_AS(Permutation({0}), ContractError);
  CHECK_THROWS_AS(Permutation({2, 3}), ContractError);
  CHECK_NOTHROW(Permutation{});
}

TEST_CASE("to_string round trips") {
  CHECK(to_string(Permutation{}) == "()");
  CHECK(to_string(Permutation{4, 1, 3, 5, 2}) == "41352");
  const Permutation ten = Permutation::identity(10);
  CHECK(to_string(ten) == "1,2,3,4,5,6,7,8,9,10");
  CHECK(parse_perm(to_string(ten)) == ten);
  std::ostringstream os;
  os << Permutation{2, 1};
  CHECK(os.str() == "21");
  for_each_permutation(5, [](const Permutation& w) {
    CHECK(parse_perm(to_string(w)) == w);
    return true;
  });
}

TEST_CASE("basic operations agree with the oracle") {
  for (int n = 0; n <= 6; ++n) {
    std::size_t seen = 0;
    Permutation previous;
    for_each_permutation(n, [&](const Permutation& w) {
      if (seen > 0) CHECK(previous < w);
      previous = w;
      ++seen;
      CHECK(word(inverse(w)) == oracle::invert(word(w)));
      CHECK(inverse(inverse(w)) == w);
      CHECK(reverse(reverse(w)) == w);
      CHECK(complement(complement(w)) == w);
      for (int i = 1; i <= n; ++i) CHECK(w.position_of(w(i)) == i);
      return true;
    });
    CHECK(seen == oracle::all_words(n).size());
  }
}

TEST_CASE("for_each_permutation stops early") {
  int calls = 0;
  for_each_permutation(5, [&](const Permutation&) { return ++calls < 3; });
  CHECK(calls == 3);
}

TEST_CASE("standardize and hashing") {
  const std::vector<int> values{40, -3, 17};
  CHECK(standardize(values) == Permutation{3, 1, 2});
  std::unordered_set<Permutation> set;
  for_each_permutation(4, [&](const Permutation& w) {
    set.insert(w);
    return true;
  });
  CHECK(set.size() == 24);
}

TEST_CASE("stats examples") {
  const PermStats s = stats(parse_perm("31248756"));
  CHECK(s.ltr_max_positions == std::vector<int>{1, 4, 5});
  CHECK(s.rtl_max_positions == std::vector<int>{5, 6, 8});
  CHECK(stats(Permutation{1}).descents == 0);
  CHECK(stats(Permutation{1}).inverse_descents == 0);
  CHECK(stats(parse_perm("41352")).descents == 2);
  CHECK(stats(parse_perm("41352")).inverse_descents == 2);
  const PermStats empty = stats(Permutation{});
  CHECK(empty.ltr_max_positions.empty());
  CHECK(empty.rtl_min_positions.empty());
  CHECK(empty.descents == 0);
}

TEST_CASE("record positions match their definitions") {
  for_each_permutation(6, [](const Permutation& w) {
    const PermStats s = stats(w);
    std::vector<int> lmax, rmax, lmin, rmin;
    for (int i = 1; i <= w.size(); ++i) {
      bool is_lmax = true, is_rmax = true, is_lmin = true, is_rmin = true;
      for (int k = 1; k < i; ++k) {
        is_lmax = is_lmax && w(k) < w(i);
        is_lmin = is_lmin && w(k) > w(i);
      }
      for (int k = i + 1; k <= w.size(); ++k) {
        is_rmax = is_rmax && w(k) < w(i);
        is_rmin = is_rmin && w(k) > w(i);
      }
      if (is_lmax) lmax.push_back(i);
      if (is_rmax) rmax.push_back(i);
      if (is_lmin) lmin.push_back(i);
      if (is_rmin) rmin.push_back(i);
    }
    CHECK(s.ltr_max_positions == lmax);
    CHECK(s.rtl_max_positions == rmax);
    CHECK(s.ltr_min_positions == lmin);
    CHECK(s.rtl_min_positions == rmin);
    CHECK(s.descents == oracle::count_descents(word(w)));
    CHECK(s.inverse_descents == oracle::count_descents(oracle::invert(word(w))));
    return true;
  });
}
