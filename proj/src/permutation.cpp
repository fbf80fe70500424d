#include "baxterlab/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "baxterlab/errors.hpp"

namespace baxterlab {

namespace {

void check_labels(const std::vector<int>& labels) {
  const auto n = labels.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : labels) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw ContractError("label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ContractError("duplicate label " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Permutation::Permutation(std::vector<int> labels) : labels_(std::move(labels)) {
  check_labels(labels_);
}

Permutation::Permutation(std::initializer_list<int> labels) : labels_(labels) {
  check_labels(labels_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return Permutation(std::move(labels));
}

int Permutation::position_of(int label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw ContractError("label " + std::to_string(label) + " not present");
  }
  return static_cast<int>(it - labels_.begin()) + 1;
}

Permutation inverse(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(std::move(out));
}

Permutation reverse(const Permutation& w) {
  std::vector<int> out(w.labels().rbegin(), w.labels().rend());
  return Permutation(std::move(out));
}

Permutation complement(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v : w.labels()) out.push_back(n + 1 - v);
  return Permutation(std::move(out));
}

Permutation standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
  std::vector<int> out(values.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

Permutation parse_perm(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "()") return {};

  std::vector<std::string> tokens;
  const bool listed = text.find_first_of(", \t") != std::string_view::npos;
  if (listed) {
    std::string current;
    bool pending_comma = false;
    for (char c : text) {
      if (c == ',') {
        if (current.empty() && (pending_comma || tokens.empty())) {
          throw ParseError("empty token in \"" + std::string(text) + "\"");
        }
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
        pending_comma = true;
      } else if (c == ' ' || c == '\t') {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(c);
        pending_comma = false;
      }
    }
    if (pending_comma) throw ParseError("empty token in \"" + std::string(text) + "\"");
    if (!current.empty()) tokens.push_back(std::move(current));
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }

  const int n = static_cast<int>(tokens.size());
  std::vector<int> labels;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& tok : tokens) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("invalid token \"" + tok + "\"");
    }
    if (v < 1 || v > n) {
      throw ParseError("label \"" + tok + "\" outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("duplicate label \"" + tok + "\"");
    seen[static_cast<std::size_t>(v)] = true;
    labels.push_back(v);
  }
  return Permutation(std::move(labels));
}

std::string to_string(const Permutation& w) {
  if (w.empty()) return "()";
  std::string out;
  const bool compact = w.size() <= 9;
  for (int v : w.labels()) {
    if (!compact && !out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << to_string(w); }

void for_each_permutation(int n, const std::function<bool(const Permutation&)>& visit) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  do {
    if (!visit(Permutation(labels))) return;
  } while (std::next_permutation(labels.begin(), labels.end()));
}

}  // namespace baxterlab

std::size_t std::hash<baxterlab::Permutation>::operator()(const baxterlab::Permutation& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : w.labels()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}
