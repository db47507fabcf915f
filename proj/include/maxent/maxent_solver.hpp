#pragma once
// Maximum-entropy distribution over K particle-number states with a fixed
// mean. The solution is w_M ∝ exp(-gamma M); gamma is found by root-finding
// on the dual, whose derivative is minus the variance of M.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include <Eigen/Core>

#include "maxent/errors.hpp"
#include "maxent/root_finding.hpp"

namespace maxent {

template <typename Scalar>
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Probability weights over an ordered set of particle-number states.
template <typename Scalar = double>
struct GeneralEnsemble {
  std::vector<int> states;
  ArrayX<Scalar> weights;

  Scalar mean() const {
    Scalar m(0);
    for (std::size_t i = 0; i < states.size(); ++i)
      m += weights(Eigen::Index(i)) * Scalar(states[i]);
    return m;
  }

  Scalar entropy() const {
    using std::log;
    Scalar s(0);
    for (Eigen::Index i = 0; i < weights.size(); ++i)
      if (weights(i) > Scalar(0))
        s -= weights(i) * log(weights(i));
    return s;
  }
};

template <typename Scalar = double>
struct MaxEntSolution {
  GeneralEnsemble<Scalar> ensemble;
  Scalar gamma{};
  int iterations = 0;
};

/// ln sum_M exp(-gamma (M - shift)), with `shift` the state minimizing gamma M.
template <typename Scalar = double>
struct LogPartition {
  Scalar value{};
  int shift = 0;
  Scalar gamma{};

  /// ln sum_M exp(-gamma M)
  Scalar unshifted() const { return value - gamma * Scalar(shift); }
};

/// Throws InvalidInput unless the list has >= 2 distinct non-negative
/// states in strictly increasing order.
inline void validate_states(const std::vector<int> &states) {
  if (states.size() < 2)
    throw InvalidInput("states: at least two particle-number states are required");
  if (states.front() < 0)
    throw InvalidInput("states: particle numbers must be non-negative");
  for (std::size_t i = 1; i < states.size(); ++i)
    if (states[i] <= states[i - 1])
      throw InvalidInput("states: must be strictly increasing");
}

namespace detail {

template <typename Scalar>
int partition_shift(const std::vector<int> &states, const Scalar &gamma) {
  return gamma >= Scalar(0) ? states.front() : states.back();
}

// Unnormalized shifted Boltzmann factors; the largest is exactly 1.
template <typename Scalar>
ArrayX<Scalar> shifted_factors(const std::vector<int> &states, const Scalar &gamma) {
  using std::exp;
  const int shift = partition_shift(states, gamma);
  ArrayX<Scalar> f(Eigen::Index(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i)
    f(Eigen::Index(i)) = exp(-gamma * Scalar(states[i] - shift));
  return f;
}

template <typename Scalar>
struct Moments {
  Scalar mean;
  Scalar variance;
};

template <typename Scalar>
Moments<Scalar> moments(const std::vector<int> &states, const ArrayX<Scalar> &w, int shift) {
  // accumulate offsets from the shift so the dominant state contributes
  // no rounding near the edges
  Scalar offset(0);
  for (std::size_t i = 0; i < states.size(); ++i)
    offset += w(Eigen::Index(i)) * Scalar(states[i] - shift);
  Scalar var(0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Scalar d = Scalar(states[i] - shift) - offset;
    var += w(Eigen::Index(i)) * d * d;
  }
  return {Scalar(shift) + offset, var};
}

} // namespace detail

template <typename Scalar>
LogPartition<Scalar> log_partition(const std::vector<int> &states, Scalar gamma) {
  using std::isfinite;
  using std::log;
  validate_states(states);
  if (!isfinite(gamma))
    throw InvalidInput("gamma must be finite");
  const auto factors = detail::shifted_factors(states, gamma);
  return {log(factors.sum()), detail::partition_shift(states, gamma), gamma};
}

/// Maximum-entropy weights w_M ∝ exp(-gamma M) at a given multiplier.
template <typename Scalar>
GeneralEnsemble<Scalar> ensemble_at(const std::vector<int> &states, Scalar gamma) {
  validate_states(states);
  auto factors = detail::shifted_factors(states, gamma);
  factors /= factors.sum();
  return {states, std::move(factors)};
}

/// Maximum-entropy distribution over `states` with mean `target_mean`.
///
/// Requires min(states) < target_mean < max(states). Safeguarded Newton on
/// gamma with bisection fallback, starting from the bracket [-50, 50]
/// (widened if the target sits closer to an edge than that bracket
/// resolves). Stops when |mean - target| <= 1e-12 (1 + |target|).
template <typename Scalar>
MaxEntSolution<Scalar> solve_maxent(const std::vector<int> &states, Scalar target_mean) {
  using std::abs;
  using std::isfinite;
  validate_states(states);
  if (!isfinite(target_mean))
    throw InvalidInput("target mean must be finite");
  if (!(target_mean > Scalar(states.front()) && target_mean < Scalar(states.back())))
    throw OutOfRange("target mean must lie strictly inside (min(states), max(states))");

  auto f_df = [&](const Scalar &gamma) {
    auto w = detail::shifted_factors(states, gamma);
    w /= w.sum();
    const auto m = detail::moments(states, w, detail::partition_shift(states, gamma));
    return std::pair<Scalar, Scalar>{m.mean - target_mean, -m.variance};
  };

  Scalar bound(50);
  const Scalar bound_limit(1e6);
  while (bound < bound_limit &&
         !(f_df(-bound).first > Scalar(0) && f_df(bound).first < Scalar(0)))
    bound *= 2;

  const Scalar tol = Scalar(1e-12) * (Scalar(1) + abs(target_mean));
  auto done = [&](const Scalar &residual, const Scalar &) { return abs(residual) <= tol; };
  const auto root = root::safeguarded_newton(f_df, -bound, bound, Scalar(0), done, 200);
  if (!root.converged)
    throw ConvergenceFailure("solve_maxent: no convergence within 200 iterations");

  MaxEntSolution<Scalar> out;
  out.ensemble = ensemble_at(states, root.x);
  out.gamma = root.x;
  out.iterations = root.iterations;
  return out;
}

/// Exhaustive scan of the probability simplex on a grid of spacing
/// `grid_step`, keeping points whose mean is within `constraint_tol` of
/// the target and returning the one of largest entropy. Serves as an
/// oracle for solve_maxent; supports 3 or 4 states.
template <typename Scalar = double>
GeneralEnsemble<Scalar> brute_force_maxent(const std::vector<int> &states, Scalar target_mean,
                                           Scalar grid_step, Scalar constraint_tol) {
  using std::abs;
  using std::log;
  validate_states(states);
  if (states.size() < 3 || states.size() > 4)
    throw InvalidInput("brute_force_maxent: supports 3 or 4 states");
  if (!(grid_step >= Scalar(1e-4) && grid_step <= Scalar(1e-2)))
    throw InvalidInput("brute_force_maxent: grid_step must lie in [1e-4, 1e-2]");
  if (!(constraint_tol >= Scalar(0)))
    throw InvalidInput("brute_force_maxent: constraint_tol must be non-negative");

  const int n = static_cast<int>(std::lround(static_cast<double>(Scalar(1) / grid_step)));
  const Scalar inv_n = Scalar(1) / Scalar(n);
  std::vector<Scalar> plogp(std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Scalar p = Scalar(i) * inv_n;
    plogp[std::size_t(i)] = i == 0 ? Scalar(0) : -p * log(p);
  }
  const bool four = states.size() == 4;
  const int K = static_cast<int>(states.size());

  struct Best {
    Scalar entropy = -std::numeric_limits<Scalar>::infinity();
    std::array<int, 4> counts{-1, -1, -1, -1};
  };

  // counts[0] is the outer index; each thread owns a strided subset of it
  auto scan = [&](int first, int stride) {
    Best best;
    std::array<int, 4> c{};
    for (c[0] = first; c[0] <= n; c[0] += stride) {
      for (c[1] = 0; c[1] <= n - c[0]; ++c[1]) {
        const int rest = n - c[0] - c[1];
        for (int c2 = four ? 0 : rest; c2 <= rest; ++c2) {
          c[2] = c2;
          c[3] = rest - c2;
          Scalar mean(0), s(0);
          for (int k = 0; k < K; ++k) {
            mean += Scalar(c[std::size_t(k)]) * Scalar(states[std::size_t(k)]);
            s += plogp[std::size_t(c[std::size_t(k)])];
          }
          mean *= inv_n;
          if (abs(mean - target_mean) <= constraint_tol && s > best.entropy) {
            best.entropy = s;
            best.counts = c;
          }
        }
      }
    }
    return best;
  };

  const int threads = std::max(1, std::min(16, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<Best> partial(static_cast<std::size_t>(threads));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { partial[std::size_t(t)] = scan(t, threads); });
  }
  // equal entropies resolve to the lexicographically smallest grid point
  Best best;
  for (const auto &p : partial)
    if (p.entropy > best.entropy || (p.entropy == best.entropy && p.counts < best.counts))
      best = p;
  if (best.counts[0] < 0)
    throw Infeasible("brute_force_maxent: no grid point satisfies the mean constraint");

  ArrayX<Scalar> w(K);
  for (int k = 0; k < K; ++k)
    w(k) = Scalar(best.counts[std::size_t(k)]) * inv_n;
  return {states, std::move(w)};
}

} // namespace maxent
