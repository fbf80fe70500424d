#include "baxterlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "baxterlab/enumerate.hpp"
#include "baxterlab/errors.hpp"
#include "baxterlab/gentree.hpp"
#include "baxterlab/pattern.hpp"
#include "baxterlab/stats.hpp"
#include "baxterlab/symmetry.hpp"
#include "baxterlab/verify.hpp"

namespace baxterlab::cli {

namespace {

using nlohmann::json;

enum class Format { lines, json, csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats{{"lines", Format::lines}, {"json", Format::json}, {"csv", Format::csv}};
const std::vector<std::string> kFamilies{"baxter", "half", "quarter", "fpf-involution"};

FamilySpec family_spec(const std::string& family) {
  if (family == "baxter") return {};
  if (family == "half") return {FamilySpec::Base::baxter, Symmetry::rotate180, false};
  if (family == "quarter") return {FamilySpec::Base::baxter, Symmetry::rotate90cw, false};
  return {FamilySpec::Base::baxter, std::nullopt, true};
}

// "13" or "1..8".
std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("invalid --n value \"" + text + "\"");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(std::string_view(text).substr(0, dots));
  const int hi = to_int(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw UsageError("empty range \"" + text + "\"");
  return {lo, hi};
}

std::string positions(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string tuple_text(const Occurrence& occ) {
  std::string out = "(";
  for (std::size_t i = 0; i < occ.size(); ++i) out += (i ? "," : "") + std::to_string(occ[i]);
  return out + ")";
}

// --- count ---------------------------------------------------------------

std::optional<BigInt> count_by(const std::string& family, const std::string& method, int n,
                               const BruteLimits& limits, int jobs) {
  if (method == "formula") {
    if (family == "baxter") return baxter_count(n);
    if (family == "quarter") return quarter_turn_count(n);
    if (family == "fpf-involution") return n % 2 ? BigInt(0) : fpf_involution_count(n / 2);
    return std::nullopt;
  }
  if (method == "tree") {
    if (family == "baxter") return expand_rule(succession_rule(RuleKind::baxter), n - 1).back();
    if (family == "quarter") {
      if (n % 4 != 1) return BigInt(0);
      return expand_rule(succession_rule(RuleKind::quarter), (n - 1) / 4).back();
    }
    if (family == "half") {
      const RuleKind kind = n % 2 ? RuleKind::half_odd : RuleKind::half_even;
      return expand_rule(succession_rule(kind), n / 2).back();
    }
    return std::nullopt;
  }
  return brute_count(n, family_spec(family), limits, jobs);
}

int do_count(const std::string& family, const std::string& n_text, const std::string& method, Format format,
             const BruteLimits& limits, int jobs, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = parse_range(n_text);
  if (lo < 1) throw UsageError("--n must be >= 1");
  const std::vector<std::string> methods =
      method == "all" ? std::vector<std::string>{"formula", "tree", "brute"} : std::vector<std::string>{method};

  CountTable table;
  for (int n = lo; n <= hi; ++n) {
    for (const auto& m : methods) {
      std::optional<BigInt> c;
      if (method == "all" && m == "brute") {
        try {
          c = count_by(family, m, n, limits, jobs);
        } catch (const LimitError&) {
          continue;  // "all" runs only the methods that apply
        }
      } else {
        c = count_by(family, m, n, limits, jobs);
      }
      if (!c) {
        if (method == "all") continue;
        err << "error: method " << m << " does not apply to family " << family << '\n';
        return kExitFailure;
      }
      table.rows.push_back(CountRow{n, *c, m});
    }
  }

  switch (format) {
    case Format::csv: write_csv(out, table); break;
    case Format::json: write_json(out, table); break;
    case Format::lines:
      if (table.rows.size() == 1) {
        out << table.rows.front().count << '\n';
      } else {
        for (const auto& row : table.rows) out << row.n << '\t' << row.count << '\t' << row.method << '\n';
      }
      break;
  }
  if (!table.consistent()) {
    err << "error: methods disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

// --- list / stats --------------------------------------------------------

int do_list(const std::string& family, int n, Format format, const BruteLimits& limits, std::ostream& out) {
  if (format == Format::csv) out << "perm\n";
  for_each_member(
      n, family_spec(family),
      [&](const Permutation& w) {
        if (format == Format::json) {
          out << json{{"perm", to_string(w)}}.dump() << '\n';
        } else {
          out << to_string(w) << '\n';
        }
      },
      limits);
  return kExitOk;
}

int do_stats(const std::string& family, int n, Format format, const BruteLimits& limits, std::ostream& out) {
  const StatsTable table = stats_table(n, family_spec(family), limits);
  if (format == Format::csv) out << "descents,inverse_descents,count\n";
  for (const auto& [key, count] : table) {
    switch (format) {
      case Format::csv: out << key.first << ',' << key.second << ',' << count << '\n'; break;
      case Format::json:
        out << json{{"descents", key.first}, {"inverse_descents", key.second}, {"count", count.str()}}.dump()
            << '\n';
        break;
      case Format::lines: out << key.first << '\t' << key.second << '\t' << count << '\n'; break;
    }
  }
  return kExitOk;
}

// --- check ---------------------------------------------------------------

int do_check(const std::string& text, Format format, std::ostream& out) {
  Permutation w;
  try {
    w = parse_perm(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const bool baxter = is_baxter(w);
  const PermStats s = stats(w);
  std::vector<std::string> fixed_by;
  for (Symmetry sym : kAllSymmetries) {
    if (is_fixed(w, sym)) fixed_by.emplace_back(name(sym));
  }

  if (format == Format::lines) {
    out << to_string(w) << ": " << (baxter ? "Baxter" : "not Baxter") << '\n';
    for (const VincularPattern* p : {&pattern_3_14_2(), &pattern_2_41_3()}) {
      for (const auto& occ : vincular_occurrences(w, *p)) {
        out << "occurrence\t" << p->notation() << '\t' << tuple_text(occ) << '\n';
      }
    }
    out << "fixed_by";
    for (const auto& f : fixed_by) out << '\t' << f;
    out << '\n';
    out << "ltr_max\t" << positions(s.ltr_max_positions) << '\n'
        << "rtl_max\t" << positions(s.rtl_max_positions) << '\n'
        << "ltr_min\t" << positions(s.ltr_min_positions) << '\n'
        << "rtl_min\t" << positions(s.rtl_min_positions) << '\n'
        << "descents\t" << s.descents << '\n'
        << "inverse_descents\t" << s.inverse_descents << '\n';
    return kExitOk;
  }

  json occurrences = json::object();
  for (const VincularPattern* p : {&pattern_3_14_2(), &pattern_2_41_3()}) {
    occurrences[p->notation()] = vincular_occurrences(w, *p);
  }
  json j{{"perm", to_string(w)},
         {"baxter", baxter},
         {"occurrences", occurrences},
         {"fixed_by", fixed_by},
         {"ltr_max", s.ltr_max_positions},
         {"rtl_max", s.rtl_max_positions},
         {"ltr_min", s.ltr_min_positions},
         {"rtl_min", s.rtl_min_positions},
         {"descents", s.descents},
         {"inverse_descents", s.inverse_descents}};
  if (format == Format::json) {
    out << j.dump() << '\n';
  } else {
    out << "perm,baxter,descents,inverse_descents\n"
        << to_string(w) << ',' << (baxter ? "true" : "false") << ',' << s.descents << ',' << s.inverse_descents
        << '\n';
  }
  return kExitOk;
}

// --- tree ----------------------------------------------------------------

int do_tree(const std::string& rule_name, int depth, bool explicit_nodes, std::size_t budget, Format format,
            std::ostream& out) {
  const RuleKind kind = *parse_rule_kind(rule_name);
  if (depth < 0) throw UsageError("--depth must be >= 0");
  if (!explicit_nodes) {
    const auto sizes = expand_rule(succession_rule(kind), depth);
    if (format == Format::csv) out << "rank,size\n";
    for (std::size_t r = 0; r < sizes.size(); ++r) {
      switch (format) {
        case Format::csv: out << r << ',' << sizes[r] << '\n'; break;
        case Format::json: out << json{{"rank", r}, {"size", sizes[r].str()}}.dump() << '\n'; break;
        case Format::lines: out << r << '\t' << sizes[r] << '\n'; break;
      }
    }
    return kExitOk;
  }

  const auto family = parse_tree_family(rule_name);
  if (!family) throw UsageError("rule " + rule_name + " has no explicit permutation tree");
  const GenTree tree = explicit_tree(*family, depth, budget);
  switch (format) {
    case Format::lines: write_tree_lines(out, tree); break;
    case Format::json: write_tree_json(out, tree); break;
    case Format::csv: {
      out << "rank,perm,parent,label\n";
      std::ostringstream lines;
      write_tree_lines(lines, tree);
      std::istringstream in(lines.str());
      for (std::string line; std::getline(in, line);) {
        std::vector<std::string> fields;
        std::istringstream row(line);
        for (std::string f; std::getline(row, f, '\t');) fields.push_back(f);
        for (std::size_t i = 0; i < fields.size(); ++i) {
          const bool quote = fields[i].find(',') != std::string::npos;
          out << (i ? "," : "") << (quote ? "\"" + fields[i] + "\"" : fields[i]);
        }
        out << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

// --- verify --------------------------------------------------------------

int do_verify(const std::string& suite_name, int max_n, Format format, const BruteLimits& limits,
              std::ostream& out) {
  const auto results = run_suite(*parse_suite(suite_name), max_n, limits);
  bool all_passed = true;
  if (format == Format::csv) out << "status,check,detail\n";
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    const char* status = r.passed ? "PASS" : "FAIL";
    switch (format) {
      case Format::lines: out << status << '\t' << r.name << '\t' << r.detail << '\n'; break;
      case Format::json:
        out << json{{"status", status}, {"check", r.name}, {"detail", r.detail}}.dump() << '\n';
        break;
      case Format::csv: out << status << ",\"" << r.name << "\",\"" << r.detail << "\"\n"; break;
    }
  }
  return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Baxter permutations: symmetry classes, generating trees and exact counts", "baxterlab"};
  app.require_subcommand(1);

  Format format = Format::lines;
  int jobs = 1;
  BruteLimits limits = BruteLimits::from_environment();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: lines, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--brute-limit", limits.full_scan, "Largest n for a full S_n scan")->check(CLI::PositiveNumber);
  };

  std::string family;
  std::string n_text;
  std::string method = "all";
  auto* count = app.add_subcommand("count", "Count a family by closed formula, succession rule or brute force");
  count->add_option("--family", family, "baxter, half, quarter or fpf-involution")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  count->add_option("--n", n_text, "Permutation length, or a range A..B")->required();
  count->add_option("--method", method, "formula, tree, brute or all")
      ->check(CLI::IsMember({"formula", "tree", "brute", "all"}));
  count->add_option("--jobs", jobs, "Threads for full brute-force scans")->check(CLI::PositiveNumber);
  add_common(count);
  add_limit(count);

  int n = 0;
  auto* list = app.add_subcommand("list", "List every member of a family of one length");
  list->add_option("--family", family)->required()->check(CLI::IsMember(kFamilies));
  list->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  add_common(list);
  add_limit(list);

  auto* stats_cmd = app.add_subcommand("stats", "Joint (descents, inverse descents) distribution");
  stats_cmd->add_option("--family", family)->required()->check(CLI::IsMember(kFamilies));
  stats_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  add_common(stats_cmd);
  add_limit(stats_cmd);

  std::string perm_text;
  auto* check = app.add_subcommand("check", "Pattern occurrences, symmetries and statistics of one permutation");
  check->add_option("perm", perm_text, "Compact (41352) or comma form (10,1,2,...)")->required();
  add_common(check);

  std::string rule_name;
  int depth = 0;
  bool explicit_nodes = false;
  std::size_t budget = kDefaultNodeBudget;
  auto* tree = app.add_subcommand("tree", "Expand a succession rule, or build the explicit permutation tree");
  tree->add_option("--rule", rule_name, "catalan, baxter, half_even, half_odd or quarter")
      ->required()
      ->check(CLI::IsMember({"catalan", "baxter", "half_even", "half_odd", "quarter"}));
  tree->add_option("--depth", depth)->required()->check(CLI::NonNegativeNumber);
  tree->add_flag("--explicit", explicit_nodes, "Emit permutation nodes instead of rank sizes");
  tree->add_option("--budget", budget, "Node budget for --explicit");
  add_common(tree);

  std::string suite = "all";
  int max_n = 8;
  auto* verify = app.add_subcommand("verify", "Run invariant suites against brute-force oracles");
  verify->add_option("--suite", suite, "all, rules, isomorphism, theorem or formulas")
      ->check(CLI::IsMember({"all", "rules", "isomorphism", "theorem", "formulas"}));
  verify->add_option("--max-n", max_n, "Largest permutation length to check")->check(CLI::PositiveNumber);
  add_common(verify);
  add_limit(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return do_count(family, n_text, method, format, limits, jobs, out, err);
    if (list->parsed()) return do_list(family, n, format, limits, out);
    if (stats_cmd->parsed()) return do_stats(family, n, format, limits, out);
    if (check->parsed()) return do_check(perm_text, format, out);
    if (tree->parsed()) return do_tree(rule_name, depth, explicit_nodes, budget, format, out);
    if (verify->parsed()) return do_verify(suite, max_n, format, limits, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace baxterlab::cli
