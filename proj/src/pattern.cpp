#include "baxterlab/pattern.hpp"

#include <algorithm>
#include <functional>

#include "baxterlab/errors.hpp"

namespace baxterlab {

VincularPattern::VincularPattern(Permutation pattern, std::set<int> adjacent_pairs)
    : pattern_(std::move(pattern)), adjacent_(std::move(adjacent_pairs)) {
  for (int a : adjacent_) {
    if (a < 1 || a >= pattern_.size()) {
      throw ContractError("adjacency index " + std::to_string(a) + " outside 1.." +
                          std::to_string(pattern_.size() - 1));
    }
  }
}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<int> labels;
  std::set<int> adjacent;
  bool glued = false;
  for (char c : text) {
    if (c == '-') {
      if (labels.empty() || !glued) throw ParseError("misplaced dash in \"" + std::string(text) + "\"");
      glued = false;
      continue;
    }
    if (c < '1' || c > '9') throw ParseError("invalid pattern character '" + std::string(1, c) + "'");
    if (glued) adjacent.insert(static_cast<int>(labels.size()));
    labels.push_back(c - '0');
    glued = true;
  }
  if (!glued) throw ParseError("pattern \"" + std::string(text) + "\" is empty or ends with a dash");
  try {
    return VincularPattern(Permutation(std::move(labels)), std::move(adjacent));
  } catch (const ContractError& e) {
    throw ParseError(std::string("pattern \"") + std::string(text) + "\": " + e.what());
  }
}

std::string VincularPattern::notation() const {
  std::string out;
  for (int i = 1; i <= pattern_.size(); ++i) {
    if (i > 1 && !adjacent_.contains(i - 1)) out.push_back('-');
    out += std::to_string(pattern_(i));
  }
  return out;
}

const VincularPattern& pattern_3_14_2() {
  static const VincularPattern p = VincularPattern::parse("3-14-2");
  return p;
}

const VincularPattern& pattern_2_41_3() {
  static const VincularPattern p = VincularPattern::parse("2-41-3");
  return p;
}

std::vector<Occurrence> vincular_occurrences(const Permutation& w, const VincularPattern& p) {
  const int n = w.size();
  const int k = p.pattern().size();
  std::vector<Occurrence> found;
  Occurrence chosen;
  chosen.reserve(static_cast<std::size_t>(k));

  // Positions are chosen left to right; order-isomorphism is checked
  // incrementally against every earlier pattern letter.
  std::function<void(int)> extend = [&](int next_pos) {
    const int depth = static_cast<int>(chosen.size());
    if (depth == k) {
      found.push_back(chosen);
      return;
    }
    int lo = next_pos;
    int hi = n - (k - depth - 1);
    if (depth > 0 && p.adjacent_pairs().contains(depth)) hi = std::min(hi, lo);
    for (int pos = lo; pos <= hi && pos <= n; ++pos) {
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const bool pattern_less = p.pattern()(d + 1) < p.pattern()(depth + 1);
        const bool host_less = w(chosen[static_cast<std::size_t>(d)]) < w(pos);
        ok = pattern_less == host_less;
      }
      if (!ok) continue;
      chosen.push_back(pos);
      extend(pos + 1);
      chosen.pop_back();
    }
  };
  if (k <= n) extend(1);
  return found;
}

bool is_baxter(const Permutation& w) {
  // For each adjacent pair, pick the outer-left value that leaves the widest
  // window for the outer-right one; O(n^2) overall.
  const int n = w.size();
  for (int j = 1; j + 1 <= n; ++j) {
    const int a = w(j);
    const int b = w(j + 1);
    if (a < b) {
      // 3-14-2: w_j < w_k < w_i < w_{j+1}
      int best = 0;
      for (int i = 1; i < j; ++i) {
        if (w(i) > a && w(i) < b && w(i) > best) best = w(i);
      }
      if (best == 0) continue;
      for (int k = j + 2; k <= n; ++k) {
        if (w(k) > a && w(k) < best) return false;
      }
    } else {
      // 2-41-3: w_{j+1} < w_i < w_k < w_j
      int best = n + 1;
      for (int i = 1; i < j; ++i) {
        if (w(i) > b && w(i) < a && w(i) < best) best = w(i);
      }
      if (best == n + 1) continue;
      for (int k = j + 2; k <= n; ++k) {
        if (w(k) > best && w(k) < a) return false;
      }
    }
  }
  return true;
}

}  // namespace baxterlab
