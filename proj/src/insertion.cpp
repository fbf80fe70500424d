#include "baxterlab/insertion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "baxterlab/errors.hpp"
#include "baxterlab/pattern.hpp"
#include "baxterlab/stats.hpp"
#include "baxterlab/symmetry.hpp"

namespace baxterlab {

namespace {

void require_gap(const Permutation& w, Gap g) {
  if (g.index < 0 || g.index > w.size()) {
    throw ContractError("gap " + std::to_string(g.index) + " outside 0.." + std::to_string(w.size()));
  }
}

void require_baxter(const Permutation& w) {
  if (!is_baxter(w)) throw ContractError(to_string(w) + " is not Baxter");
}

void require_family(const Permutation& w, Family family) {
  if (!in_family(w, family)) {
    throw ContractError(to_string(w) + " is not in the " + std::string(name(family)) + " family");
  }
}

Permutation delete_at(const Permutation& w, int position) {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(w.size() - 1));
  for (int i = 1; i <= w.size(); ++i) {
    if (i != position) rest.push_back(w(i));
  }
  return standardize(rest);
}

// Quarter-turn child for a new largest label right of the right-to-left
// maximum at position j of v. The four insertions leave the 4-cycle
// (1, a, N, N+1-a) with a = j+2 when j <= (n-1)/2 and a = j+3 otherwise.
Permutation insert_quad_right_of(const Permutation& v, int j) {
  const int n = v.size();
  const bool near_front = 2 * j <= n - 1;
  const int front_label = j + 1;
  const int back_label = near_front ? n + 2 - j : n + 1 - j;
  const int full = n + 4;
  const int a = near_front ? j + 2 : j + 3;

  Permutation step = insert_boundary(v, Side::front, front_label);
  int pivot = j + 1;  // the prepended entry shifts the maximum right
  step = insert_boundary(step, Side::back, back_label);
  step = insert_largest(step, Gap{pivot});
  int largest_at = pivot + 1;

  const int one_at = full + 1 - a;
  step = insert_smallest(step, Gap{one_at - 1});
  if (one_at <= largest_at) ++largest_at;

  if (largest_at != a || step(1) != a || step(a) != full || step(full) != full + 1 - a ||
      step(one_at) != 1) {
    throw std::logic_error("quarter-turn insertion drifted at " + to_string(v) + ", j=" +
                           std::to_string(j) + ": got " + to_string(step));
  }
  return step;
}

}  // namespace

std::string_view name(Family f) {
  switch (f) {
    case Family::baxter: return "baxter";
    case Family::half: return "half";
    case Family::quarter: return "quarter";
  }
  return "?";
}

Permutation insert_largest(const Permutation& w, Gap g) {
  require_gap(w, g);
  std::vector<int> out(w.labels().begin(), w.labels().end());
  out.insert(out.begin() + g.index, w.size() + 1);
  return Permutation(std::move(out));
}

Permutation insert_smallest(const Permutation& w, Gap g) {
  require_gap(w, g);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size() + 1));
  for (int v : w.labels()) out.push_back(v + 1);
  out.insert(out.begin() + g.index, 1);
  return Permutation(std::move(out));
}

Permutation insert_boundary(const Permutation& w, Side side, int label) {
  if (label < 1 || label > w.size() + 1) {
    throw ContractError("boundary label " + std::to_string(label) + " outside 1.." +
                        std::to_string(w.size() + 1));
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.size() + 1));
  if (side == Side::front) out.push_back(label);
  for (int v : w.labels()) out.push_back(v >= label ? v + 1 : v);
  if (side == Side::back) out.push_back(label);
  return Permutation(std::move(out));
}

Permutation remove(const Permutation& w, Removal which) {
  if (w.empty()) throw ContractError("cannot remove from the empty permutation");
  switch (which) {
    case Removal::largest: return delete_at(w, w.position_of(w.size()));
    case Removal::smallest: return delete_at(w, w.position_of(1));
    case Removal::front: return delete_at(w, 1);
    case Removal::back: return delete_at(w, w.size());
  }
  return w;
}

std::vector<Gap> admissible_largest_gaps(const Permutation& w) {
  require_baxter(w);
  if (w.empty()) return {Gap{0}};
  std::vector<Gap> gaps;
  for (int pos : ltr_max_positions(w)) gaps.push_back(Gap{pos - 1});
  for (int pos : rtl_max_positions(w)) gaps.push_back(Gap{pos});
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return gaps;
}

std::vector<Gap> admissible_smallest_gaps(const Permutation& w) {
  require_baxter(w);
  if (w.empty()) return {Gap{0}};
  std::vector<Gap> gaps;
  for (int pos : ltr_min_positions(w)) gaps.push_back(Gap{pos - 1});
  for (int pos : rtl_min_positions(w)) gaps.push_back(Gap{pos});
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  return gaps;
}

std::vector<int> admissible_boundary_labels(const Permutation& w, Side side) {
  require_baxter(w);
  const int n = w.size();
  const Permutation pos = inverse(w);
  // "x lies beyond y" means right of y for back insertion, left for front.
  auto beyond = [&](int x, int y) { return side == Side::back ? pos(x) > pos(y) : pos(x) < pos(y); };

  std::vector<int> labels;
  for (int j = 1; j <= n + 1; ++j) {
    bool ok = false;
    if (j <= n || j == 1) {
      ok = true;
      for (int smaller = 1; smaller < j && ok; ++smaller) ok = beyond(j, smaller);
    }
    if (!ok && j >= 2) {
      ok = true;
      for (int bigger = j; bigger <= n && ok; ++bigger) ok = beyond(j - 1, bigger);
    }
    if (ok) labels.push_back(j);
  }
  return labels;
}

std::vector<Permutation> half_turn_children(const Permutation& w) {
  require_family(w, Family::half);
  if (w.empty()) return {Permutation{2, 1}, Permutation{1, 2}};

  const int n = w.size();
  std::vector<Permutation> children;
  for (Gap g : admissible_largest_gaps(w)) {
    const Permutation grown = insert_largest(w, g);
    const int p = g.index + 1;  // position of n+1 in `grown`
    std::vector<Permutation> candidates;
    if (2 * p < n + 3) candidates.push_back(insert_smallest(grown, Gap{n + 2 - p}));  // 1 right of n+1
    if (2 * p >= n + 2) candidates.push_back(insert_smallest(grown, Gap{n + 1 - p}));  // 1 left of n+1

    std::vector<Permutation> kept;
    for (auto& c : candidates) {
      if (is_fixed(c, Symmetry::rotate180) && is_baxter(c)) kept.push_back(std::move(c));
    }
    if (kept.size() != 1) {
      throw std::logic_error("half-turn insertion at " + to_string(w) + " gap " +
                             std::to_string(g.index) + " produced " + std::to_string(kept.size()) +
                             " symmetric Baxter children");
    }
    children.push_back(std::move(kept.front()));
  }
  return children;
}

std::vector<Permutation> quarter_turn_children(const Permutation& w) {
  require_family(w, Family::quarter);
  const int n = w.size();
  if (n % 4 != 1) throw ContractError("quarter-turn tree needs n = 4m+1, got " + std::to_string(n));

  const std::vector<int> rtl = rtl_max_positions(w);
  std::vector<Permutation> children;
  for (Gap g : admissible_largest_gaps(w)) {
    Permutation child;
    if (std::binary_search(rtl.begin(), rtl.end(), g.index)) {
      child = insert_quad_right_of(w, g.index);
    } else {
      // Left of the left-to-right maximum at g+1: mirror, insert, mirror back.
      child = reverse(insert_quad_right_of(reverse(w), n - g.index));
    }
    if (!is_fixed(child, Symmetry::rotate90cw) || !is_baxter(child)) {
      throw std::logic_error("quarter-turn child " + to_string(child) + " of " + to_string(w) +
                             " is not a fixed Baxter permutation");
    }
    children.push_back(std::move(child));
  }
  return children;
}

Permutation quarter_turn_parent(const Permutation& w) {
  require_family(w, Family::quarter);
  if (w.size() < 5) throw ContractError("quarter-turn parent needs n >= 5, got " + std::to_string(w.size()));
  Permutation out = remove(w, Removal::largest);
  out = remove(out, Removal::smallest);
  out = remove(out, Removal::front);
  return remove(out, Removal::back);
}

Permutation family_parent(const Permutation& w, Family family) {
  switch (family) {
    case Family::baxter: return remove(w, Removal::largest);
    case Family::half:
      if (w.size() < 2) throw ContractError("half-turn parent needs n >= 2");
      return remove(remove(w, Removal::largest), Removal::smallest);
    case Family::quarter: return quarter_turn_parent(w);
  }
  return w;
}

bool in_family(const Permutation& w, Family family) {
  switch (family) {
    case Family::baxter: return is_baxter(w);
    case Family::half: return is_fixed(w, Symmetry::rotate180) && is_baxter(w);
    case Family::quarter: return is_fixed(w, Symmetry::rotate90cw) && is_baxter(w);
  }
  return false;
}

int family_step(Family family) {
  switch (family) {
    case Family::baxter: return 1;
    case Family::half: return 2;
    case Family::quarter: return 4;
  }
  return 1;
}

int children_oracle_limit(Family family) { return family == Family::quarter ? 13 : 12; }

std::vector<Permutation> children_oracle(const Permutation& w, Family family) {
  require_family(w, family);
  const int n = w.size();
  const int child_length = n + family_step(family);
  if (child_length > children_oracle_limit(family)) {
    throw LimitError("children_oracle for " + std::string(name(family)) + " is limited to child length " +
                     std::to_string(children_oracle_limit(family)) + ", requested " +
                     std::to_string(child_length));
  }

  std::set<Permutation> found;
  switch (family) {
    case Family::baxter:
      for (int g = 0; g <= n; ++g) {
        Permutation c = insert_largest(w, Gap{g});
        if (is_baxter(c)) found.insert(std::move(c));
      }
      break;
    case Family::half:
      for (int g = 0; g <= n; ++g) {
        const Permutation grown = insert_largest(w, Gap{g});
        for (int h = 0; h <= n + 1; ++h) {
          Permutation c = insert_smallest(grown, Gap{h});
          if (in_family(c, Family::half)) found.insert(std::move(c));
        }
      }
      break;
    case Family::quarter: {
      // Symmetric completion: choose the new 4-cycle (1, a, N, N+1-a) and
      // lay w order-isomorphically on the remaining rows and columns.
      const int full = child_length;
      for (int a = 2; a < full; ++a) {
        const int mirror = full + 1 - a;
        if (mirror == a) continue;
        std::vector<int> labels(static_cast<std::size_t>(full), 0);
        auto set = [&](int pos, int value) { labels[static_cast<std::size_t>(pos - 1)] = value; };
        set(1, a);
        set(a, full);
        set(full, mirror);
        set(mirror, 1);
        std::vector<int> free_values;
        for (int v = 1; v <= full; ++v) {
          if (v != 1 && v != a && v != full && v != mirror) free_values.push_back(v);
        }
        int k = 1;
        for (int pos = 1; pos <= full; ++pos) {
          if (labels[static_cast<std::size_t>(pos - 1)] != 0) continue;
          set(pos, free_values[static_cast<std::size_t>(w(k) - 1)]);
          ++k;
        }
        Permutation c(std::move(labels));
        if (in_family(c, Family::quarter)) found.insert(std::move(c));
      }
      break;
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace baxterlab
