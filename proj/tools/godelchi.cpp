#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "godel/characteristics.hpp"
#include "godel/counting.hpp"
#include "godel/errors.hpp"
#include "godel/formula.hpp"
#include "godel/oracle.hpp"
#include "godel/patterns.hpp"
#include "godel/valuations.hpp"

namespace {

constexpr std::size_t kListGuard = 1'000'000;

// CHI_MAX_PATTERNS overrides the default ceiling of any pattern-bounded
// operation; an explicit flag still wins.
std::size_t pattern_guard(std::size_t fallback) {
  const char* raw = std::getenv("CHI_MAX_PATTERNS");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0)
    throw std::invalid_argument("CHI_MAX_PATTERNS must be a positive integer");
  return static_cast<std::size_t>(value);
}

class Stopwatch {
public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    if (!enabled_) return;
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const double ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    std::cerr << "elapsed: " << ms << " ms\n";
  }

private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

// Resolves the ambient variable count: the highest variable mentioned, or
// the explicit override, which may only widen.
int resolve_vars(const godel::Formula& f, std::optional<int> override_n) {
  const int least = godel::max_var(f);
  if (override_n) {
    if (*override_n < 1) throw std::invalid_argument("--vars must be >= 1");
    if (*override_n < least)
      throw std::invalid_argument("--vars " + std::to_string(*override_n) +
                                  " is below the highest variable X" + std::to_string(least));
    return *override_n;
  }
  if (least == 0)
    throw std::invalid_argument(
        "the formula names no variable; pass --vars to fix the ambient count");
  return least;
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string verdict_of(const godel::ChiReport& report) {
  if (report.godel_infinity_tautology) return "godel-infinity-tautology";
  if (report.classical_contradiction) return "classical-contradiction";
  std::string verdict = report.classical_tautology ? "classical-tautology" : "contingent";
  if (report.least_k_not_tautology)
    verdict += " (fails at k=" + std::to_string(*report.least_k_not_tautology) + ")";
  return verdict;
}

void print_report(const godel::ChiReport& report) {
  std::cout << "formula: " << report.formula << "\n";
  std::cout << "n: " << report.n << "\n";
  std::size_t chi_width = 5;
  std::size_t p_width = 6;
  for (const auto& v : report.chi) chi_width = std::max(chi_width, godel::to_decimal(v).size());
  for (const auto& v : report.p_row) p_width = std::max(p_width, godel::to_decimal(v).size());
  std::ostringstream head;
  head << "  k  " << std::setw(static_cast<int>(chi_width)) << "chi_k" << "  "
       << std::setw(static_cast<int>(p_width)) << "P(n,k)";
  std::cout << head.str() << "\n";
  for (std::size_t i = 0; i < report.chi.size(); ++i) {
    std::cout << "  " << (i + 1) << "  " << std::setw(static_cast<int>(chi_width))
              << godel::to_decimal(report.chi[i]) << "  " << std::setw(static_cast<int>(p_width))
              << godel::to_decimal(report.p_row[i]) << "\n";
  }
  std::cout << "boolean_models: " << godel::to_decimal(report.boolean_models) << "\n";
  std::cout << "classical_tautology: " << (report.classical_tautology ? "true" : "false") << "\n";
  std::cout << "classical_contradiction: " << (report.classical_contradiction ? "true" : "false")
            << "\n";
  std::cout << "godel_infinity_tautology: "
            << (report.godel_infinity_tautology ? "true" : "false") << "\n";
  if (report.least_k_not_tautology)
    std::cout << "least_k_not_tautology: " << *report.least_k_not_tautology << "\n";
  else
    std::cout << "least_k_not_tautology: none\n";
}

// "v1,v2,...,vn:top" -> the pattern of that assignment.
godel::OrderPattern parse_pattern_spec(const std::string& spec, int n) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("pattern spec must look like v1,v2,...:top");
  std::vector<int> values;
  std::stringstream list(spec.substr(0, colon));
  std::string item;
  while (std::getline(list, item, ','))
    values.push_back(std::stoi(item));
  const int top = std::stoi(spec.substr(colon + 1));
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("pattern spec names " + std::to_string(values.size()) +
                                " values but --n is " + std::to_string(n));
  return godel::pattern_of(godel::LevelAssignment(n, top, std::move(values)));
}

struct ChiOptions {
  std::string formula;
  std::optional<int> vars;
  std::optional<int> k;
  int threads = 0;
  bool json = false;
  bool timing = false;
};

void run_chi(const ChiOptions& opt, bool classify) {
  Stopwatch watch(opt.timing);
  const godel::Formula f = godel::parse(opt.formula);
  const int n = resolve_vars(f, opt.vars);
  if (opt.k) {
    if (*opt.k < 1) throw std::invalid_argument("--k must be >= 1");
    const godel::BigInt value = godel::chi(f, n, *opt.k, opt.threads);
    if (opt.json) {
      nlohmann::json out;
      out["formula"] = godel::to_string(f);
      out["n"] = n;
      out["k"] = *opt.k;
      out["chi_k"] = godel::to_decimal(value);
      emit_json(out);
    } else {
      std::cout << godel::to_decimal(value) << "\n";
    }
    return;
  }
  const godel::ChiReport report = godel::chi_vector(f, n, opt.threads);
  if (classify) {
    if (opt.json) {
      nlohmann::json out;
      out["formula"] = report.formula;
      out["n"] = report.n;
      out["verdict"] = verdict_of(report);
      out["least_k_not_tautology"] = report.least_k_not_tautology
                                         ? nlohmann::json(*report.least_k_not_tautology)
                                         : nlohmann::json(nullptr);
      emit_json(out);
    } else {
      std::cout << report.formula << ": " << verdict_of(report) << "\n";
    }
    return;
  }
  if (opt.json)
    emit_json(godel::to_json(report));
  else
    print_report(report);
}

struct TableOptions {
  int max_n = 9;
  int max_k = 7;
  bool tree = false;
  bool json = false;
  bool timing = false;
};

void run_table(const TableOptions& opt) {
  Stopwatch watch(opt.timing);
  if (opt.max_n < 1 || opt.max_k < 1)
    throw std::invalid_argument("--max-n and --max-k must be positive");
  godel::CountTable counts;
  const auto rows =
      opt.tree ? counts.tree_table(opt.max_n, opt.max_k) : counts.class_table(opt.max_n, opt.max_k);
  if (opt.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json line = nlohmann::json::array();
      for (const auto& value : row) line.push_back(godel::to_decimal(value));
      out.push_back(std::move(line));
    }
    emit_json(out);
    return;
  }
  std::vector<std::size_t> widths(static_cast<std::size_t>(opt.max_k));
  for (int k = 1; k <= opt.max_k; ++k)
    widths[static_cast<std::size_t>(k - 1)] = ("k=" + std::to_string(k)).size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], godel::to_decimal(row[c]).size());
  std::size_t label_width = 0;
  for (int n = 1; n <= opt.max_n; ++n)
    label_width = std::max(label_width, ("n=" + std::to_string(n)).size());

  std::cout << std::string(label_width, ' ');
  for (int k = 1; k <= opt.max_k; ++k)
    std::cout << "  " << std::setw(static_cast<int>(widths[static_cast<std::size_t>(k - 1)]))
              << ("k=" + std::to_string(k));
  std::cout << "\n";
  for (int n = 1; n <= opt.max_n; ++n) {
    std::cout << std::setw(static_cast<int>(label_width)) << ("n=" + std::to_string(n));
    const auto& row = rows[static_cast<std::size_t>(n - 1)];
    for (std::size_t c = 0; c < row.size(); ++c)
      std::cout << "  " << std::setw(static_cast<int>(widths[c])) << godel::to_decimal(row[c]);
    std::cout << "\n";
  }
}

struct PatternOptions {
  int n = 0;
  std::optional<int> max_height;
  bool count = false;
  bool list = false;
  std::string dot_path;
  bool json = false;
  bool timing = false;
};

void run_patterns(const PatternOptions& opt) {
  Stopwatch watch(opt.timing);
  if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
  const int height = opt.max_height.value_or(opt.n + 1);
  if (height < 1) throw std::invalid_argument("--max-height must be >= 1");

  if (!opt.dot_path.empty()) {
    const std::size_t guard = pattern_guard(kListGuard);
    if (opt.dot_path == "-") {
      godel::write_forest_dot(std::cout, opt.n, height, guard);
    } else {
      std::ofstream out(opt.dot_path);
      if (!out) throw std::invalid_argument("cannot open " + opt.dot_path + " for writing");
      godel::write_forest_dot(out, opt.n, height, guard);
    }
    return;
  }
  if (opt.list) {
    const std::size_t guard = pattern_guard(kListGuard);
    const auto patterns = godel::all_patterns(opt.n, height, guard);
    if (opt.json) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& p : patterns) {
        nlohmann::json entry;
        entry["pattern"] = p.to_string();
        entry["height"] = p.height();
        out.push_back(std::move(entry));
      }
      emit_json(out);
    } else {
      for (const auto& p : patterns)
        std::cout << p.to_string() << " h=" << p.height() << "\n";
    }
    return;
  }
  const std::uint64_t count = godel::count_patterns(opt.n, height);
  if (opt.json) {
    nlohmann::json out;
    out["n"] = opt.n;
    out["max_height"] = height;
    out["count"] = std::to_string(count);
    emit_json(out);
  } else {
    std::cout << count << "\n";
  }
}

struct ValuationOptions {
  int n = 0;
  std::optional<int> k;
  std::string pattern_spec;
  std::optional<std::size_t> max_patterns;
  bool json = false;
  bool timing = false;
};

std::size_t valuation_guard(const ValuationOptions& opt) {
  if (opt.max_patterns) return *opt.max_patterns;
  return pattern_guard(godel::kDenseValuationGuard);
}

godel::Valuation select_valuation(const ValuationOptions& opt, std::string& description) {
  const bool have_k = opt.k.has_value();
  const bool have_pattern = !opt.pattern_spec.empty();
  if (have_k == have_pattern)
    throw std::invalid_argument("pick a valuation: exactly one of --chi or --pattern-of");
  if (have_k) {
    description = "chi_" + std::to_string(*opt.k);
    return godel::chi_as_valuation(opt.n, *opt.k, valuation_guard(opt));
  }
  const godel::OrderPattern p = parse_pattern_spec(opt.pattern_spec, opt.n);
  description = "indicator of " + p.to_string();
  return godel::Valuation::indicator(p);
}

void run_valuations_dims(const ValuationOptions& opt) {
  Stopwatch watch(opt.timing);
  if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
  const godel::SpaceDims d = godel::space_dims(opt.n, valuation_guard(opt));
  if (opt.json) {
    nlohmann::json out;
    out["n"] = opt.n;
    out["c"] = d.c;
    out["i_perm"] = d.i_perm;
    out["v"] = godel::to_decimal(d.v);
    emit_json(out);
  } else {
    std::cout << "c=" << d.c << " i_perm=" << d.i_perm << " v=" << godel::to_decimal(d.v) << "\n";
  }
}

void run_valuations_det(const ValuationOptions& opt) {
  Stopwatch watch(opt.timing);
  if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
  const godel::Rational det = godel::determinant(godel::independence_matrix(opt.n));
  if (opt.json) {
    nlohmann::json out;
    out["n"] = opt.n;
    out["determinant"] = godel::to_ratio(det);
    emit_json(out);
  } else {
    std::cout << godel::to_ratio(det) << "\n";
  }
}

void run_valuations_invariant(const ValuationOptions& opt) {
  Stopwatch watch(opt.timing);
  if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
  std::string description;
  const godel::Valuation nu = select_valuation(opt, description);
  const bool invariant = godel::is_invariant(nu);
  if (opt.json) {
    nlohmann::json out;
    out["n"] = opt.n;
    out["valuation"] = description;
    out["invariant"] = invariant;
    emit_json(out);
  } else {
    std::cout << description << ": " << (invariant ? "invariant" : "not invariant") << "\n";
  }
}

void run_valuations_span(const ValuationOptions& opt) {
  Stopwatch watch(opt.timing);
  if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
  std::string description;
  const godel::Valuation nu = select_valuation(opt, description);
  const auto coefficients = godel::in_span_of_chis(nu, valuation_guard(opt));
  if (opt.json) {
    nlohmann::json out;
    out["n"] = opt.n;
    out["valuation"] = description;
    out["in_span"] = coefficients.has_value();
    if (coefficients) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& r : *coefficients) list.push_back(godel::to_ratio(r));
      out["coefficients"] = std::move(list);
    } else {
      out["coefficients"] = nullptr;
    }
    emit_json(out);
    return;
  }
  if (!coefficients) {
    std::cout << description << ": not in the span of chi_1..chi_" << (opt.n + 1) << "\n";
    return;
  }
  std::cout << description << ": in span;";
  for (std::size_t i = 0; i < coefficients->size(); ++i)
    std::cout << " r_" << (i + 1) << "=" << godel::to_ratio((*coefficients)[i]);
  std::cout << "\n";
}

struct OracleOptions {
  std::string formula;
  std::optional<int> vars;
  int n = 0;
  int k = 0;
  std::uint64_t max_assignments = godel::kOracleAssignmentGuard;
  bool json = false;
  bool timing = false;
};

void run_oracle_chi(const OracleOptions& opt) {
  Stopwatch watch(opt.timing);
  const godel::Formula f = godel::parse(opt.formula);
  const int n = resolve_vars(f, opt.vars);
  if (opt.k < 1) throw std::invalid_argument("--k must be >= 1");
  const godel::BigInt value = godel::brute_chi(f, n, opt.k, opt.max_assignments);
  if (opt.json) {
    nlohmann::json out;
    out["formula"] = godel::to_string(f);
    out["n"] = n;
    out["k"] = opt.k;
    out["brute_chi"] = godel::to_decimal(value);
    emit_json(out);
  } else {
    std::cout << godel::to_decimal(value) << "\n";
  }
}

void run_oracle_classes(const OracleOptions& opt) {
  Stopwatch watch(opt.timing);
  if (opt.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (opt.k < 1) throw std::invalid_argument("--k must be >= 1");
  const godel::BigInt value = godel::brute_class_count(opt.n, opt.k, opt.max_assignments);
  if (opt.json) {
    nlohmann::json out;
    out["n"] = opt.n;
    out["k"] = opt.k;
    out["classes"] = godel::to_decimal(value);
    emit_json(out);
  } else {
    std::cout << godel::to_decimal(value) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalised Euler characteristics of Goedel-logic formulas.\n"
      "Truth values form a finite chain; chi_k counts the assignment classes\n"
      "of height <= k satisfying a formula, and chi_k = P(n,k) decides\n"
      "tautology in (k+1)-valued Goedel logic. k beyond n+1 is clamped to\n"
      "n+1, where the chain stabilizes."};
  app.require_subcommand(1);

  ChiOptions chi_opt;
  CLI::App* chi_cmd = app.add_subcommand("chi", "Compute the chi_k chain and verdicts");
  chi_cmd->add_option("formula", chi_opt.formula, "Formula, e.g. \"(X1 -> X2) | (X2 -> X1)\"")
      ->required();
  chi_cmd->add_option("--vars", chi_opt.vars, "Ambient variable count (>= highest variable)");
  chi_cmd->add_option("--k", chi_opt.k, "Report the single value chi_k (k > n+1 clamps to n+1)");
  chi_cmd->add_option("--threads", chi_opt.threads, "Worker threads; 0 = all cores");
  chi_cmd->add_flag("--json", chi_opt.json, "Machine-readable output");
  chi_cmd->add_flag("--timing", chi_opt.timing, "Wall time to stderr");
  chi_cmd->callback([&chi_opt] { run_chi(chi_opt, false); });

  ChiOptions classify_opt;
  CLI::App* classify_cmd = app.add_subcommand("classify", "One-line tautology verdict");
  classify_cmd->add_option("formula", classify_opt.formula, "Formula")->required();
  classify_cmd->add_option("--vars", classify_opt.vars, "Ambient variable count");
  classify_cmd->add_option("--threads", classify_opt.threads, "Worker threads; 0 = all cores");
  classify_cmd->add_flag("--json", classify_opt.json, "Machine-readable output");
  classify_cmd->add_flag("--timing", classify_opt.timing, "Wall time to stderr");
  classify_cmd->callback([&classify_opt] { run_chi(classify_opt, true); });

  TableOptions table_opt;
  CLI::App* table_cmd = app.add_subcommand("table", "P(n,k) class counts (or T with --tree)");
  table_cmd->add_option("--max-n", table_opt.max_n, "Rows n = 1..max-n");
  table_cmd->add_option("--max-k", table_opt.max_k, "Columns k = 1..max-k");
  table_cmd->add_flag("--tree", table_opt.tree, "T(n,k) per-height tree counts instead of P");
  table_cmd->add_flag("--json", table_opt.json, "Array of arrays of decimal strings");
  table_cmd->add_flag("--timing", table_opt.timing, "Wall time to stderr");
  table_cmd->callback([&table_opt] { run_table(table_opt); });

  PatternOptions pattern_opt;
  CLI::App* patterns_cmd = app.add_subcommand("patterns", "Enumerate assignment classes");
  patterns_cmd->add_option("--n", pattern_opt.n, "Variable count")->required();
  patterns_cmd->add_option("--max-height", pattern_opt.max_height,
                           "Height bound (default n+1, the full forest)");
  patterns_cmd->add_flag("--count", pattern_opt.count, "Print the count (default)");
  patterns_cmd->add_flag("--list", pattern_opt.list, "Print one pattern per line");
  patterns_cmd->add_option("--dot", pattern_opt.dot_path, "Write the forest as Graphviz; - for stdout");
  patterns_cmd->add_flag("--json", pattern_opt.json, "Machine-readable output");
  patterns_cmd->add_flag("--timing", pattern_opt.timing, "Wall time to stderr");
  patterns_cmd->callback([&pattern_opt] { run_patterns(pattern_opt); });

  ValuationOptions val_opt;
  CLI::App* val_cmd = app.add_subcommand("valuations", "The valuation space of the Lindenbaum algebra");
  val_cmd->require_subcommand(1);
  auto add_val_common = [&val_opt](CLI::App* sub, bool wants_valuation) {
    sub->add_option("--n", val_opt.n, "Variable count")->required();
    if (wants_valuation) {
      sub->add_option("--chi", val_opt.k, "Use the valuation chi_k");
      sub->add_option("--pattern-of", val_opt.pattern_spec,
                      "Use the indicator of the class of the assignment v1,...,vn:top");
    }
    sub->add_option("--max-patterns", val_opt.max_patterns,
                    "Pattern-universe guard (default 20000 or CHI_MAX_PATTERNS)");
    sub->add_flag("--json", val_opt.json, "Machine-readable output");
    sub->add_flag("--timing", val_opt.timing, "Wall time to stderr");
  };
  CLI::App* dims_cmd = val_cmd->add_subcommand(
      "dims", "Dimensions: span of the chi_k, permutation-invariant subspace, full space");
  add_val_common(dims_cmd, false);
  dims_cmd->callback([&val_opt] { run_valuations_dims(val_opt); });
  CLI::App* det_cmd =
      val_cmd->add_subcommand("det", "Determinant of the chi independence system (always 1)");
  add_val_common(det_cmd, false);
  det_cmd->callback([&val_opt] { run_valuations_det(val_opt); });
  CLI::App* inv_cmd =
      val_cmd->add_subcommand("invariant", "Is the valuation fixed by variable permutations?");
  add_val_common(inv_cmd, true);
  inv_cmd->callback([&val_opt] { run_valuations_invariant(val_opt); });
  CLI::App* span_cmd =
      val_cmd->add_subcommand("span", "Express the valuation in chi_1..chi_{n+1} if possible");
  add_val_common(span_cmd, true);
  span_cmd->callback([&val_opt] { run_valuations_span(val_opt); });

  OracleOptions oracle_opt;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force reference scans (test evidence only)");
  oracle_cmd->require_subcommand(1);
  CLI::App* oracle_chi_cmd =
      oracle_cmd->add_subcommand("chi", "chi_k by exhausting all (k+1)^n assignments");
  oracle_chi_cmd->add_option("formula", oracle_opt.formula, "Formula")->required();
  oracle_chi_cmd->add_option("--vars", oracle_opt.vars, "Ambient variable count");
  oracle_chi_cmd->add_option("--k", oracle_opt.k, "Truth-value chain 0..k")->required();
  oracle_chi_cmd->add_option("--max-assignments", oracle_opt.max_assignments,
                             "Guard on (k+1)^n");
  oracle_chi_cmd->add_flag("--json", oracle_opt.json, "Machine-readable output");
  oracle_chi_cmd->add_flag("--timing", oracle_opt.timing, "Wall time to stderr");
  oracle_chi_cmd->callback([&oracle_opt] { run_oracle_chi(oracle_opt); });
  CLI::App* oracle_classes_cmd =
      oracle_cmd->add_subcommand("classes", "Count assignment classes the slow way");
  oracle_classes_cmd->add_option("--n", oracle_opt.n, "Variable count")->required();
  oracle_classes_cmd->add_option("--k", oracle_opt.k, "Truth-value chain 0..k")->required();
  oracle_classes_cmd->add_option("--max-assignments", oracle_opt.max_assignments,
                                 "Guard on (k+1)^n");
  oracle_classes_cmd->add_flag("--json", oracle_opt.json, "Machine-readable output");
  oracle_classes_cmd->add_flag("--timing", oracle_opt.timing, "Wall time to stderr");
  oracle_classes_cmd->callback([&oracle_opt] { run_oracle_classes(oracle_opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  } catch (const godel::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const godel::GuardExceeded& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
