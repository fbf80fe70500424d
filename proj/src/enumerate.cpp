#include "baxterlab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "baxterlab/errors.hpp"
#include "baxterlab/pattern.hpp"
#include "baxterlab/stats.hpp"

namespace baxterlab {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error(std::string("inexact division in ") + what);
  return q;
}

// Orbit completion for rotations and the main-diagonal reflection. `next`
// maps (position, value) to the cell the symmetry forces next; following it
// from a seed cell walks one orbit.
class FixedPointGenerator {
 public:
  FixedPointGenerator(int n, Symmetry s, const std::function<void(const Permutation&)>& visit)
      : n_(n), s_(s), visit_(visit), value_(static_cast<std::size_t>(n) + 1, 0),
        used_(static_cast<std::size_t>(n) + 1, false) {}

  void run() { place(1); }

 private:
  std::pair<int, int> next(int r, int c) const {
    switch (s_) {
      case Symmetry::rotate90cw: return {c, n_ + 1 - r};
      case Symmetry::rotate90ccw: return {n_ + 1 - c, r};
      case Symmetry::rotate180: return {n_ + 1 - r, n_ + 1 - c};
      default: return {c, r};  // inverse
    }
  }

  void place(int pos) {
    while (pos <= n_ && value_[static_cast<std::size_t>(pos)] != 0) ++pos;
    if (pos > n_) {
      visit_(Permutation(std::vector<int>(value_.begin() + 1, value_.end())));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      std::vector<int> placed;
      if (assign_orbit(pos, v, placed)) place(pos + 1);
      for (int p : placed) {
        used_[static_cast<std::size_t>(value_[static_cast<std::size_t>(p)])] = false;
        value_[static_cast<std::size_t>(p)] = 0;
      }
    }
  }

  bool assign_orbit(int r, int c, std::vector<int>& placed) {
    const int r0 = r;
    const int c0 = c;
    do {
      const auto pr = static_cast<std::size_t>(r);
      const auto pc = static_cast<std::size_t>(c);
      if (value_[pr] != 0 || used_[pc]) return false;
      value_[pr] = c;
      used_[pc] = true;
      placed.push_back(r);
      std::tie(r, c) = next(r, c);
    } while (r != r0 || c != c0);
    return true;
  }

  int n_;
  Symmetry s_;
  const std::function<void(const Permutation&)>& visit_;
  std::vector<int> value_;
  std::vector<bool> used_;
};

void matchings(std::vector<int>& labels, int n, const std::function<void(const Permutation&)>& visit) {
  const auto first = std::find(labels.begin(), labels.end(), 0);
  if (first == labels.end()) {
    visit(Permutation(labels));
    return;
  }
  const int i = static_cast<int>(first - labels.begin()) + 1;
  for (int j = i + 1; j <= n; ++j) {
    if (labels[static_cast<std::size_t>(j - 1)] != 0) continue;
    labels[static_cast<std::size_t>(i - 1)] = j;
    labels[static_cast<std::size_t>(j - 1)] = i;
    matchings(labels, n, visit);
    labels[static_cast<std::size_t>(i - 1)] = 0;
    labels[static_cast<std::size_t>(j - 1)] = 0;
  }
}

bool has_orbit_generator(const FamilySpec& family) {
  if (family.fpf_involution) return true;
  if (!family.symmetry) return false;
  switch (*family.symmetry) {
    case Symmetry::rotate90cw:
    case Symmetry::rotate90ccw:
    case Symmetry::rotate180:
    case Symmetry::inverse: return true;
    default: return false;
  }
}

void require_within(int n, const FamilySpec& family, const BruteLimits& limits) {
  if (n < 0) throw ContractError("length must be >= 0");
  const bool orbit = has_orbit_generator(family);
  const int limit = orbit ? limits.symmetric : limits.full_scan;
  if (n > limit) {
    throw LimitError("brute force over " + family.describe() + " is limited to n <= " + std::to_string(limit) +
                     (orbit ? " (symmetric generation)" : " (full S_n scan; set BAXTERLAB_BRUTE_LIMIT to raise)") +
                     ", requested n = " + std::to_string(n) + "; use the formula or tree method instead");
  }
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt baxter_count(int n) {
  if (n < 1) throw ContractError("baxter_count needs n >= 1");
  const BigInt denom = binomial(n + 1, 1) * binomial(n + 1, 2);
  BigInt total = 0;
  for (int k = 0; k < n; ++k) {
    total += exact_div(binomial(n + 1, k) * binomial(n + 1, k + 1) * binomial(n + 1, k + 2), denom,
                       "Baxter summand");
  }
  return total;
}

BigInt catalan(int m) {
  if (m < 0) throw ContractError("catalan needs m >= 0");
  return exact_div(binomial(2 * m, m), m + 1, "Catalan number");
}

BigInt quarter_turn_count(int n) {
  if (n < 1) throw ContractError("quarter_turn_count needs n >= 1");
  if (n % 4 != 1) return 0;
  const int m = (n - 1) / 4;
  return (BigInt(1) << m) * catalan(m);
}

BigInt fpf_involution_count(int n) {
  if (n < 1) throw ContractError("fpf_involution_count needs n >= 1");
  const BigInt num = 3 * (BigInt(1) << (n - 1)) * binomial(2 * n, n);
  return exact_div(num, BigInt(n + 1) * (n + 2), "fpf involution formula");
}

bool FamilySpec::contains(const Permutation& w) const {
  if (fpf_involution) {
    for (int i = 1; i <= w.size(); ++i) {
      if (w(i) == i || w(w(i)) != i) return false;
    }
  }
  if (symmetry && !is_fixed(w, *symmetry)) return false;
  return base == Base::all || is_baxter(w);
}

std::string FamilySpec::describe() const {
  std::string out = base == Base::baxter ? "baxter" : "all";
  if (symmetry) out += "+" + std::string(name(*symmetry));
  if (fpf_involution) out += "+fpf_involution";
  return out;
}

BruteLimits BruteLimits::from_environment() {
  BruteLimits limits;
  if (const char* env = std::getenv("BAXTERLAB_BRUTE_LIMIT")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.full_scan = static_cast<int>(v);
  }
  return limits;
}

bool for_each_fixed_permutation(int n, Symmetry s, const std::function<void(const Permutation&)>& visit) {
  switch (s) {
    case Symmetry::rotate90cw:
    case Symmetry::rotate90ccw:
    case Symmetry::rotate180:
    case Symmetry::inverse: FixedPointGenerator(n, s, visit).run(); return true;
    default: return false;
  }
}

void for_each_fpf_involution(int n, const std::function<void(const Permutation&)>& visit) {
  if (n % 2 != 0) return;
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  matchings(labels, n, visit);
}

void for_each_member(int n, const FamilySpec& family, const std::function<void(const Permutation&)>& visit,
                     const BruteLimits& limits) {
  require_within(n, family, limits);
  auto filtered = [&](const Permutation& w) {
    if (family.contains(w)) visit(w);
  };
  if (family.fpf_involution) {
    for_each_fpf_involution(n, filtered);
    return;
  }
  if (family.symmetry && for_each_fixed_permutation(n, *family.symmetry, filtered)) return;
  for_each_permutation(n, [&](const Permutation& w) {
    filtered(w);
    return true;
  });
}

BigInt brute_count(int n, const FamilySpec& family, const BruteLimits& limits, int jobs) {
  require_within(n, family, limits);
  if (jobs <= 1 || n < 2 || has_orbit_generator(family)) {
    BigInt count = 0;
    for_each_member(n, family, [&](const Permutation&) { ++count; }, limits);
    return count;
  }

  // Partition the lexicographic scan by first entry.
  jobs = std::min(jobs, n);
  std::vector<unsigned long long> partial(static_cast<std::size_t>(jobs), 0);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      std::vector<int> labels(static_cast<std::size_t>(n));
      for (int first = t + 1; first <= n; first += jobs) {
        labels[0] = first;
        int fill = 1;
        for (int v = 1; v <= n; ++v) {
          if (v != first) labels[static_cast<std::size_t>(fill++)] = v;
        }
        do {
          if (family.contains(Permutation(labels))) ++partial[static_cast<std::size_t>(t)];
        } while (std::next_permutation(labels.begin() + 1, labels.end()));
      }
    });
  }
  for (auto& w : workers) w.join();
  BigInt count = 0;
  for (auto c : partial) count += c;
  return count;
}

StatsTable stats_table(int n, const FamilySpec& family, const BruteLimits& limits) {
  StatsTable table;
  for_each_member(
      n, family,
      [&](const Permutation& w) { table[{descents(w), descents(inverse(w))}] += 1; }, limits);
  return table;
}

bool CountTable::consistent() const {
  std::map<int, BigInt> seen;
  for (const auto& row : rows) {
    const auto [it, inserted] = seen.emplace(row.n, row.count);
    if (!inserted && it->second != row.count) return false;
  }
  return true;
}

void write_csv(std::ostream& os, const CountTable& table) {
  os << "n,count,method\n";
  for (const auto& row : table.rows) os << row.n << ',' << row.count << ',' << row.method << '\n';
}

void write_json(std::ostream& os, const CountTable& table) {
  for (const auto& row : table.rows) {
    nlohmann::json j;
    j["n"] = row.n;
    j["count"] = row.count.str();
    j["method"] = row.method;
    os << j.dump() << '\n';
  }
}

}  // namespace baxterlab
