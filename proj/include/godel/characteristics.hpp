#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "godel/formula.hpp"
#include "godel/numbers.hpp"

namespace godel {

/// Everything chi_vector knows about a formula over X1..Xn: the chain
/// chi[k-1] = chi_k for k = 1..n+1 alongside the matching row of P values,
/// plus the verdicts they imply.
struct ChiReport {
  std::string formula;
  int n = 0;
  std::vector<BigInt> chi;    // chi[k-1] = chi_k(formula), k = 1..n+1
  std::vector<BigInt> p_row;  // p_row[k-1] = P(n,k)
  BigInt boolean_models;      // = chi_1
  bool classical_tautology = false;      // chi_1 = 2^n
  bool classical_contradiction = false;  // chi_1 = 0
  bool godel_infinity_tautology = false;  // chi_{n+1} = P(n,n+1)
  /// Smallest k with chi_k < P(n,k); empty when a tautology in every G_{k+1}.
  std::optional<int> least_k_not_tautology;
};

/// chi_k(f) over n variables: the number of assignment classes of height
/// <= k whose canonical assignment makes f true. k > n+1 is clamped to n+1
/// (the chain stabilizes there). threads <= 0 means hardware concurrency.
BigInt chi(const Formula& f, int n, int k, int threads = 0);

/// One scan, every k: per-height satisfied-class counts accumulated into the
/// full chi chain and its verdicts.
ChiReport chi_vector(const Formula& f, int n, int threads = 0);

/// f is a tautology of (k+1)-valued Goedel logic, i.e. chi_k(f) = P(n,k).
bool is_tautology_gk(const Formula& f, int n, int k, int threads = 0);

/// f is a tautology of infinite-valued Goedel logic, i.e. chi_{n+1}(f) =
/// P(n,n+1).
bool is_tautology_ginf(const Formula& f, int n, int threads = 0);

/// f and g denote the same element of the Lindenbaum algebra over X1..Xn:
/// every class of height <= n+1 gives them equal value.
bool equivalent(const Formula& f, const Formula& g, int n);

/// Machine-readable report; big integers as decimal strings.
nlohmann::json to_json(const ChiReport& report);

}  // namespace godel
