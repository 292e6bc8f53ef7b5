#include "pasep/chain.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "pasep/ansatz.hpp"
#include "pasep/errors.hpp"
#include "pasep/motzkin.hpp"

namespace pasep {

void ChainParams::validate() const {
  if (!(alpha > 0 && alpha <= 1)) throw InvalidParameter("alpha must satisfy 0 < alpha <= 1, got " + to_string(alpha));
  if (!(beta > 0 && beta <= 1)) throw InvalidParameter("beta must satisfy 0 < beta <= 1, got " + to_string(beta));
  if (!(q >= 0 && q <= 1)) throw InvalidParameter("q must satisfy 0 <= q <= 1, got " + to_string(q));
  if (n > 30) throw InvalidParameter("n is limited to 30 sites");
}

TransitionMatrix transition_matrix(const ChainParams& params) {
  params.validate();
  const std::size_t n = params.n;
  const std::size_t size = params.states();
  const Rational unit(1, static_cast<unsigned long>(n + 1));
  TransitionMatrix t{n, std::vector<std::vector<Rational>>(size, std::vector<Rational>(size, Rational(0)))};

  // Bit (n - i) of the index is site i.
  auto bit = [n](std::size_t i) { return std::size_t{1} << (n - i); };
  for (std::size_t x = 0; x < size; ++x) {
    auto& row = t.p[x];
    Rational leaving = 0;
    auto add = [&](std::size_t y, const Rational& pr) {
      row[y] += pr;
      leaving += pr;
    };
    if (n > 0) {
      if (!(x & bit(1))) add(x | bit(1), params.alpha * unit);
      if (x & bit(n)) add(x & ~bit(n), params.beta * unit);
    }
    for (std::size_t i = 1; i < n; ++i) {
      const bool left = x & bit(i);
      const bool right = x & bit(i + 1);
      if (left && !right) add((x & ~bit(i)) | bit(i + 1), unit);
      if (!left && right && params.q != 0) add((x & ~bit(i + 1)) | bit(i), params.q * unit);
    }
    row[x] = 1 - leaving;
  }
  return t;
}

ExactDistribution steady_state_exact(const ChainParams& params, std::size_t site_limit) {
  params.validate();
  if (params.n > site_limit) {
    throw InvalidParameter("exact solve limited to " + std::to_string(site_limit) + " sites, got " +
                           std::to_string(params.n));
  }
  const auto t = transition_matrix(params);
  const std::size_t size = params.states();

  // Augmented system (P^T - I | 0), last row replaced by (1 ... 1 | 1).
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size + 1, Rational(0)));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) a[i][j] = t.p[j][i];
    a[i][i] -= 1;
  }
  for (std::size_t j = 0; j <= size; ++j) a[size - 1][j] = 1;

  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) throw std::logic_error("steady_state_exact: stationary system is singular");
    std::swap(a[pivot], a[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j <= size; ++j) a[col][j] *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = col; j <= size; ++j) {
        if (a[col][j] != 0) a[r][j] -= factor * a[col][j];
      }
    }
  }
  ExactDistribution d{params.n, std::vector<Rational>(size)};
  for (std::size_t i = 0; i < size; ++i) {
    d.prob[i] = a[i][size];
    d.prob[i].canonicalize();
  }
  return d;
}

ExactDistribution ansatz_distribution(const ChainParams& params) {
  params.validate();
  const AnsatzEvaluator evaluator(AnsatzKind::Tableau, default_dim(params.n));
  const Rational z = evaluator.partition_function(params.n).eval(params.q, params.alpha, params.beta);
  ExactDistribution d{params.n, {}};
  for (const auto& tau : all_configurations(params.n)) {
    d.prob.push_back(evaluator.eval(tau).eval(params.q, params.alpha, params.beta) / z);
    d.prob.back().canonicalize();
  }
  return d;
}

namespace {

// 53 random bits in [0, 1).
double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11u) * 0x1.0p-53; }

// Unbiased integer in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

EmpiricalDistribution simulate(const ChainParams& params, std::uint64_t steps, std::uint64_t burn_in,
                               std::uint64_t seed) {
  params.validate();
  if (steps == 0) throw InvalidParameter("simulate: steps must be positive");
  const std::size_t n = params.n;
  const double q = params.q.get_d();
  const double alpha = params.alpha.get_d();
  const double beta = params.beta.get_d();
  auto bit = [n](std::size_t i) { return std::uint64_t{1} << (n - i); };

  std::mt19937_64 rng(seed);
  std::uint64_t state = 0;
  std::vector<std::uint64_t> counts(params.states(), 0);

  // Each step picks one of the n+1 slots uniformly (entry, the n-1 bonds, exit) and fires
  // it with the slot's rate, which realises P_{X,Y} = rate / (n + 1).
  auto step = [&] {
    if (n == 0) return;
    const std::uint64_t slot = uniform_below(rng, n + 1);
    const double u = unit_double(rng);
    if (slot == 0) {
      if (!(state & bit(1)) && u < alpha) state |= bit(1);
    } else if (slot == n) {
      if ((state & bit(n)) && u < beta) state &= ~bit(n);
    } else {
      const bool left = state & bit(slot);
      const bool right = state & bit(slot + 1);
      if (left && !right) {
        state = (state & ~bit(slot)) | bit(slot + 1);
      } else if (!left && right && u < q) {
        state = (state & ~bit(slot + 1)) | bit(slot);
      }
    }
  };

  for (std::uint64_t i = 0; i < burn_in; ++i) step();
  for (std::uint64_t i = 0; i < steps; ++i) {
    step();
    ++counts[state];
  }
  EmpiricalDistribution d{n, steps, std::vector<double>(counts.size())};
  for (std::size_t i = 0; i < counts.size(); ++i) d.freq[i] = static_cast<double>(counts[i]) / static_cast<double>(steps);
  return d;
}

double total_variation(const EmpiricalDistribution& estimate, const ExactDistribution& exact) {
  if (estimate.freq.size() != exact.prob.size()) throw InvalidParameter("total_variation: size mismatch");
  double s = 0;
  for (std::size_t i = 0; i < exact.prob.size(); ++i) s += std::abs(estimate.freq[i] - exact.prob[i].get_d());
  return s / 2;
}

bool FormulationReport::all_passed() const {
  for (const auto& r : rows) {
    if (!r.passed) return false;
  }
  return true;
}

FormulationReport compare_formulations(const ChainParams& params, std::size_t site_limit) {
  const auto solved = steady_state_exact(params, site_limit);
  const auto via_ansatz = ansatz_distribution(params);
  const bool unit_boundaries = params.alpha == 1 && params.beta == 1;
  std::vector<Rational> path_weights;
  Rational z_motzkin = 0;
  if (unit_boundaries) {
    for (const auto& tau : all_configurations(params.n)) {
      path_weights.push_back(genfun_type(tau).eval_q(params.q));
      z_motzkin += path_weights.back();
    }
  }

  FormulationReport report{params, {}};
  for (const auto& tau : all_configurations(params.n)) {
    FormulationRow row{tau, solved[tau], via_ansatz[tau], std::nullopt, false};
    row.passed = row.solved == row.tableau;
    if (unit_boundaries) {
      Rational m = path_weights[tau.index()] / z_motzkin;
      m.canonicalize();
      row.passed = row.passed && m == row.solved;
      row.motzkin = m;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace pasep
