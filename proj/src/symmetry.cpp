#include "baxterlab/symmetry.hpp"

#include <utility>
#include <vector>

#include "baxterlab/errors.hpp"

namespace baxterlab {

namespace {

// Image of matrix cell (r, c) in an n x n grid.
std::pair<int, int> move_cell(Symmetry s, int n, int r, int c) {
  switch (s) {
    case Symmetry::identity: return {r, c};
    case Symmetry::reverse: return {n + 1 - r, c};
    case Symmetry::complement: return {r, n + 1 - c};
    case Symmetry::inverse: return {c, r};
    case Symmetry::rotate90cw: return {c, n + 1 - r};
    case Symmetry::rotate90ccw: return {n + 1 - c, r};
    case Symmetry::rotate180: return {n + 1 - r, n + 1 - c};
    case Symmetry::antidiagonal: return {n + 1 - c, n + 1 - r};
  }
  return {r, c};
}

}  // namespace

std::string_view name(Symmetry s) {
  switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::reverse: return "reverse";
    case Symmetry::complement: return "complement";
    case Symmetry::inverse: return "inverse";
    case Symmetry::rotate90cw: return "rotate90cw";
    case Symmetry::rotate90ccw: return "rotate90ccw";
    case Symmetry::rotate180: return "rotate180";
    case Symmetry::antidiagonal: return "antidiagonal";
  }
  return "?";
}

std::optional<Symmetry> parse_symmetry(std::string_view text) {
  for (Symmetry s : kAllSymmetries) {
    if (name(s) == text) return s;
  }
  return std::nullopt;
}

Permutation apply_symmetry(const Permutation& w, Symmetry s) {
  const int n = w.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto [r, c] = move_cell(s, n, i, w(i));
    out[static_cast<std::size_t>(r - 1)] = c;
  }
  return Permutation(std::move(out));
}

bool is_fixed(const Permutation& w, Symmetry s) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    const auto [r, c] = move_cell(s, n, i, w(i));
    if (w(r) != c) return false;
  }
  return true;
}

bool quarter_cycle_check(const Permutation& w) {
  if (!is_fixed(w, Symmetry::rotate90cw)) throw ContractError("not quarter-turn fixed");
  const int n = w.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  bool central_seen = false;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = w(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    if (cycle.size() == 1) {
      if (n % 2 == 0 || 2 * start != n + 1) return false;
      central_seen = true;
      continue;
    }
    if (cycle.size() != 4) return false;
    const int i = cycle[0];
    const int j = cycle[1];
    if (cycle[2] != n + 1 - i || cycle[3] != n + 1 - j) return false;
  }
  return n % 2 == 0 || central_seen;
}

}  // namespace baxterlab
