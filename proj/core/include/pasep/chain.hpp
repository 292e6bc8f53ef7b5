#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pasep/poly.hpp"
#include "pasep/shapes.hpp"

namespace pasep {

/// Discrete-time PASEP on n sites: 0 < alpha <= 1, 0 < beta <= 1, 0 <= q <= 1.
struct ChainParams {
  std::size_t n = 0;
  Rational q = 1;
  Rational alpha = 1;
  Rational beta = 1;

  /// Throws InvalidParameter when a parameter is out of range.
  void validate() const;
  std::size_t states() const noexcept { return std::size_t{1} << n; }
};

/// Rows and columns indexed by Configuration::index() (site 1 is the most significant bit).
struct TransitionMatrix {
  std::size_t n = 0;
  std::vector<std::vector<Rational>> p;

  const Rational& operator()(const Configuration& from, const Configuration& to) const {
    return p[from.index()][to.index()];
  }
};

/// Hops right with 1/(n+1), left with q/(n+1), entry with alpha/(n+1), exit with beta/(n+1);
/// the diagonal takes the remainder.
TransitionMatrix transition_matrix(const ChainParams& params);

/// Probabilities indexed by Configuration::index().
struct ExactDistribution {
  std::size_t n = 0;
  std::vector<Rational> prob;

  const Rational& operator[](const Configuration& tau) const { return prob.at(tau.index()); }
};

struct EmpiricalDistribution {
  std::size_t n = 0;
  std::uint64_t steps = 0;
  std::vector<double> freq;

  double operator[](const Configuration& tau) const { return freq.at(tau.index()); }
};

inline constexpr std::size_t kDefaultExactSiteLimit = 10;

/// Unique v with vP = v, sum(v) = 1, by exact elimination over the rationals on P^T - I
/// with one row replaced by the normalisation. Throws InvalidParameter past `site_limit`.
ExactDistribution steady_state_exact(const ChainParams& params, std::size_t site_limit = kDefaultExactSiteLimit);

/// f(tau)(q, alpha, beta) / Z_n from the tableau ansatz, for every tau.
ExactDistribution ansatz_distribution(const ChainParams& params);

/// Seeded simulation: `burn_in` unrecorded steps, then occupancy frequencies over `steps` steps.
/// Uses std::mt19937_64 and converts its output to doubles by hand so the stream is identical
/// on every platform. steps must be positive.
EmpiricalDistribution simulate(const ChainParams& params, std::uint64_t steps, std::uint64_t burn_in,
                               std::uint64_t seed);

double total_variation(const EmpiricalDistribution& estimate, const ExactDistribution& exact);

struct FormulationRow {
  Configuration tau;
  Rational solved;                     ///< from steady_state_exact
  Rational tableau;                    ///< eval(f_tau) / eval(Z_n)
  std::optional<Rational> motzkin;     ///< genfun_type(tau)(q) / Z_n(q), only at alpha = beta = 1
  bool passed = false;
};

struct FormulationReport {
  ChainParams params;
  std::vector<FormulationRow> rows;

  bool all_passed() const;
};

/// Checks the Markov-chain stationary law against the ansatz and, at alpha = beta = 1,
/// against bicolored Motzkin paths, state by state.
FormulationReport compare_formulations(const ChainParams& params, std::size_t site_limit = kDefaultExactSiteLimit);

}  // namespace pasep
