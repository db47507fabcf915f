#pragma once
// Charge equilibration across several domains that share one chemical
// potential gamma. Each domain responds with nu_k(gamma); the total is
// strictly decreasing in gamma, so a fixed total transferred charge picks
// out a unique gamma*.
//
// The shared-gamma coupling is a modeling choice (electronegativity
// equalization); no per-domain offsets are introduced.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "maxent/ensemble.hpp"

namespace maxent {

template <typename Scalar = double>
struct DomainCharge {
  std::string label;
  Scalar nu{};
  Scalar population{};
};

template <typename Scalar = double>
struct NetworkSolution {
  Scalar gamma_star{};
  std::vector<DomainCharge<Scalar>> per_domain;
  Scalar total_charge{};
  Scalar residual{};
  int iterations = 0;
};

namespace detail {

inline void require_domains(const std::vector<DomainSpec> &domains) {
  if (domains.empty())
    throw InvalidInput("at least one domain is required");
  for (const auto &d : domains)
    DomainSpec::make(d.label, d.N, d.q);
}

} // namespace detail

/// Sum of nu(q_k, gamma) over the domains.
template <typename Scalar>
Scalar total_charge_at(const std::vector<DomainSpec> &domains, Scalar gamma) {
  detail::require_domains(domains);
  Scalar total(0);
  for (const auto &d : domains)
    total += nu_from_gamma(d.q, gamma);
  return total;
}

template <typename Scalar>
Scalar total_charge_slope(const std::vector<DomainSpec> &domains, Scalar gamma) {
  Scalar slope(0);
  for (const auto &d : domains)
    slope += dnu_dgamma(d.q, gamma);
  return slope;
}

/// Shared gamma* with total_charge_at(domains, gamma*) = target.
///
/// Requires |target| < sum q_k. Bisection on [-g, g] with g = 60 / min q_k
/// narrows the bracket, then safeguarded Newton polishes inside it.
template <typename Scalar>
NetworkSolution<Scalar> equilibrate(const std::vector<DomainSpec> &domains, Scalar target) {
  using std::abs;
  detail::require_domains(domains);
  detail::require_finite(target, "total charge");
  int capacity = 0;
  int q_min = domains.front().q;
  for (const auto &d : domains) {
    capacity += d.q;
    q_min = std::min(q_min, d.q);
  }
  if (!(abs(target) < Scalar(capacity)))
    throw OutOfRange("total charge must lie strictly inside (-sum q, sum q)");

  auto residual = [&](const Scalar &g) { return total_charge_at(domains, g) - target; };
  auto f_df = [&](const Scalar &g) {
    return std::pair<Scalar, Scalar>{residual(g), total_charge_slope(domains, g)};
  };

  NetworkSolution<Scalar> out;
  if (target == Scalar(0)) {
    out.gamma_star = Scalar(0);
  } else {
    Scalar g_max = Scalar(60) / Scalar(q_min);
    // targets within rounding of +/- sum q saturate beyond 60 / q_min
    while ((residual(-g_max) > Scalar(0)) == (residual(g_max) > Scalar(0)) &&
           g_max < Scalar(1e6))
      g_max *= 2;
    auto [lo, hi] = root::bisect(residual, -g_max, g_max, Scalar(1e-3));
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar tol = Scalar(4) * eps * (Scalar(1) + abs(target));
    auto done = [&](const Scalar &f, const Scalar &) { return abs(f) <= tol; };
    const auto root = root::safeguarded_newton(f_df, lo, hi, (lo + hi) / Scalar(2), done, 200);
    if (!root.converged)
      throw ConvergenceFailure("equilibrate: Newton polish did not converge");
    out.gamma_star = root.x;
    out.iterations = root.iterations;
  }

  out.per_domain.reserve(domains.size());
  Scalar total(0);
  for (const auto &d : domains) {
    const Scalar nu = nu_from_gamma(d.q, out.gamma_star);
    out.per_domain.push_back({d.label, nu, Scalar(d.N) + nu});
    total += nu;
  }
  out.total_charge = total;
  out.residual = abs(total - target);
  return out;
}

} // namespace maxent
