#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "baxterlab/permutation.hpp"

namespace baxterlab {

/// Elements of the dihedral group of the square acting on permutation
/// matrices. The matrix of w has a 1 at (row i, column w_i); rotate90cw sends
/// cell (r, c) to (c, n+1-r).
enum class Symmetry {
  identity,
  reverse,
  complement,
  inverse,
  rotate90cw,
  rotate90ccw,
  rotate180,
  antidiagonal,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::identity,   Symmetry::reverse,     Symmetry::complement, Symmetry::inverse,
    Symmetry::rotate90cw, Symmetry::rotate90ccw, Symmetry::rotate180,  Symmetry::antidiagonal,
};

std::string_view name(Symmetry s);
std::optional<Symmetry> parse_symmetry(std::string_view text);

Permutation apply_symmetry(const Permutation& w, Symmetry s);

bool is_fixed(const Permutation& w, Symmetry s);

/// For a quarter-turn fixed w: true iff its cycles are all of the form
/// (i, j, n+1-i, n+1-j), plus the central fixed point (n+1)/2 when n is odd.
/// Throws ContractError("not quarter-turn fixed") otherwise.
bool quarter_cycle_check(const Permutation& w);

}  // namespace baxterlab
