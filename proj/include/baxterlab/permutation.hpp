#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace baxterlab {

/// A permutation of {1, ..., n} in one-line notation. Positions are
/// 1-indexed in the public API: `w(i)` is the entry w_i.
///
/// The empty permutation (n = 0) is a valid value; it roots the even
/// half-turn tree.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ContractError unless `labels` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> labels);
  Permutation(std::initializer_list<int> labels);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  /// Entry at 1-indexed position `i`.
  int operator()(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> labels() const { return labels_; }

  /// 1-indexed position of `label`.
  int position_of(int label) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> labels_;
};

Permutation inverse(const Permutation& w);
Permutation reverse(const Permutation& w);
Permutation complement(const Permutation& w);

/// Relabels an arbitrary sequence of distinct integers to the order-isomorphic
/// permutation of 1..n.
Permutation standardize(std::span<const int> values);

/// Accepts the compact digit form ("41352") or a comma/space separated list
/// ("10,1,2"). "" and "()" denote the empty permutation.
Permutation parse_perm(std::string_view text);

/// Compact digits when n <= 9, comma separated otherwise, "()" when empty.
std::string to_string(const Permutation& w);

std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// Calls `visit` on every permutation of length n in lexicographic order.
/// Stops early if `visit` returns false.
void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit);

}  // namespace baxterlab

template <>
struct std::hash<baxterlab::Permutation> {
  std::size_t operator()(const baxterlab::Permutation& w) const noexcept;
};
