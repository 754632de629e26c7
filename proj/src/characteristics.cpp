#include "godel/characteristics.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "godel/counting.hpp"
#include "godel/patterns.hpp"
#include "godel/semantics.hpp"

namespace godel {

namespace {

const CountTable& shared_counts() {
  static const CountTable table;
  return table;
}

void validate(const CompiledFormula& cf, int n, int k) {
  if (n < 1) throw std::invalid_argument("chi: n must be >= 1");
  if (k < 1) throw std::invalid_argument("chi: k must be >= 1");
  if (cf.max_var() > n)
    throw std::invalid_argument("chi: formula references X" + std::to_string(cf.max_var()) +
                                " but n = " + std::to_string(n));
}

// {block count, first level}: one slice of the enumeration space.
struct WorkUnit {
  int m;
  int first;
};

// satisfied[m] = number of classes with m intermediate blocks (height m+1)
// whose canonical assignment makes the formula true, for m+1 <= max_height.
std::vector<BigInt> satisfied_by_height(const CompiledFormula& cf, int n, int max_height,
                                        int threads) {
  const int max_m = std::min(max_height - 1, n);
  std::vector<BigInt> satisfied(static_cast<std::size_t>(max_m) + 1);

  std::vector<WorkUnit> units;
  for (int m = 0; m <= max_m; ++m)
    for (int first = 0; first <= m + 1; ++first) units.push_back({m, first});

  unsigned hardware = std::thread::hardware_concurrency();
  if (hardware == 0) hardware = 1;
  int workers = threads <= 0 ? static_cast<int>(hardware) : threads;
  workers = std::min<int>(workers, static_cast<int>(units.size()));

  // Small scans are cheaper single-threaded than the spawn overhead.
  if (workers <= 1 || shared_counts().class_count(n, max_height) <= 65536) {
    std::vector<int> stack;
    for (int m = 0; m <= max_m; ++m) {
      const int top = m + 1;
      std::uint64_t count = 0;
      for_each_level_vector(n, m, [&](std::span<const int> levels) {
        if (cf.eval(levels, top, stack) == top) ++count;
        return true;
      });
      satisfied[static_cast<std::size_t>(m)] = count;
    }
    return satisfied;
  }

  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  auto worker = [&]() {
    std::vector<BigInt> local(satisfied.size());
    std::vector<int> stack;
    for (;;) {
      const std::size_t index = next.fetch_add(1, std::memory_order_relaxed);
      if (index >= units.size()) break;
      const WorkUnit unit = units[index];
      const int top = unit.m + 1;
      std::uint64_t count = 0;
      for_each_level_vector_with_first(n, unit.m, unit.first, [&](std::span<const int> levels) {
        if (cf.eval(levels, top, stack) == top) ++count;
        return true;
      });
      local[static_cast<std::size_t>(unit.m)] += count;
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t i = 0; i < satisfied.size(); ++i) satisfied[i] += local[i];
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return satisfied;
}

}  // namespace

BigInt chi(const Formula& f, int n, int k, int threads) {
  const CompiledFormula cf(f);
  validate(cf, n, k);
  const int height = std::min(k, n + 1);
  const std::vector<BigInt> satisfied = satisfied_by_height(cf, n, height, threads);
  BigInt total = 0;
  for (const BigInt& part : satisfied) total += part;
  return total;
}

ChiReport chi_vector(const Formula& f, int n, int threads) {
  const CompiledFormula cf(f);
  validate(cf, n, 1);
  const std::vector<BigInt> satisfied = satisfied_by_height(cf, n, n + 1, threads);
  const CountTable& counts = shared_counts();

  ChiReport report;
  report.formula = to_string(f);
  report.n = n;
  report.chi.reserve(static_cast<std::size_t>(n) + 1);
  report.p_row.reserve(static_cast<std::size_t>(n) + 1);
  BigInt running = 0;
  for (int k = 1; k <= n + 1; ++k) {
    running += satisfied[static_cast<std::size_t>(k - 1)];
    report.chi.push_back(running);
    report.p_row.push_back(counts.class_count(n, k));
  }
  report.boolean_models = report.chi.front();
  report.classical_tautology = report.chi.front() == (BigInt(1) << n);
  report.classical_contradiction = report.chi.front() == 0;
  report.godel_infinity_tautology = report.chi.back() == report.p_row.back();
  for (int k = 1; k <= n + 1; ++k) {
    if (report.chi[static_cast<std::size_t>(k - 1)] < report.p_row[static_cast<std::size_t>(k - 1)]) {
      report.least_k_not_tautology = k;
      break;
    }
  }
  return report;
}

bool is_tautology_gk(const Formula& f, int n, int k, int threads) {
  return chi(f, n, k, threads) == shared_counts().class_count(n, std::min(k, n + 1));
}

bool is_tautology_ginf(const Formula& f, int n, int threads) {
  return is_tautology_gk(f, n, n + 1, threads);
}

bool equivalent(const Formula& f, const Formula& g, int n) {
  const CompiledFormula cf(f);
  const CompiledFormula cg(g);
  validate(cf, n, 1);
  validate(cg, n, 1);
  std::vector<int> stack;
  bool equal = true;
  for (int m = 0; m <= n && equal; ++m) {
    const int top = m + 1;
    for_each_level_vector(n, m, [&](std::span<const int> levels) {
      if (cf.eval(levels, top, stack) != cg.eval(levels, top, stack)) {
        equal = false;
        return false;
      }
      return true;
    });
  }
  return equal;
}

nlohmann::json to_json(const ChiReport& report) {
  nlohmann::json chi_values = nlohmann::json::array();
  for (const BigInt& v : report.chi) chi_values.push_back(to_decimal(v));
  nlohmann::json p_values = nlohmann::json::array();
  for (const BigInt& v : report.p_row) p_values.push_back(to_decimal(v));

  nlohmann::json out;
  out["formula"] = report.formula;
  out["n"] = report.n;
  out["chi"] = std::move(chi_values);
  out["p"] = std::move(p_values);
  out["boolean_models"] = to_decimal(report.boolean_models);
  out["classical_tautology"] = report.classical_tautology;
  out["classical_contradiction"] = report.classical_contradiction;
  out["godel_infinity_tautology"] = report.godel_infinity_tautology;
  if (report.least_k_not_tautology)
    out["least_k_not_tautology"] = *report.least_k_not_tautology;
  else
    out["least_k_not_tautology"] = nullptr;
  return out;
}

}  // namespace godel
