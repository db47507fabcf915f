#pragma once
// Three-state maximum-entropy ensemble of a molecular domain.
//
// A domain with baseline electron count N may give or take up to q
// electrons, so its state mixes the pure N-q, N and N+q electron states.
// Maximizing the Shannon entropy of the mixing weights under normalization
// and a fixed mean population N + nu gives the closed form
//
//     w_center = 1 / (1 + 2 cosh(q gamma)),   w_{N -/+ q} = exp(+/- q gamma) w_center
//
// where gamma is the Lagrange multiplier of the population constraint
// (read as the domain's chemical potential, chi = -gamma). Everything here
// depends on gamma only through x = q gamma.
//
// All functions are templated on the scalar type so the same code runs in
// double, long double or a multiprecision type.

#include <cmath>
#include <limits>
#include <string>

#include "maxent/errors.hpp"
#include "maxent/root_finding.hpp"

namespace maxent {

/// A molecular domain: label, baseline electron count N, charge capacity q.
struct DomainSpec {
  std::string label;
  int N = 0;
  int q = 1;

  /// Validating factory. Throws InvalidInput unless q >= 1 and N - q >= 0.
  static DomainSpec make(std::string label, int N, int q) {
    if (q < 1)
      throw InvalidInput("domain '" + label + "': q must be >= 1");
    if (N < 0)
      throw InvalidInput("domain '" + label + "': N must be >= 0");
    if (N - q < 0)
      throw InvalidInput("domain '" + label + "': N - q must be >= 0");
    return DomainSpec{std::move(label), N, q};
  }
};

/// Convex coefficients of the N-q, N and N+q electron states.
template <typename Scalar = double>
struct ThreeStateWeights {
  Scalar minus{};  // N - q (cationic edge)
  Scalar center{}; // N
  Scalar plus{};   // N + q (anionic edge)

  Scalar sum() const { return minus + center + plus; }
};

template <typename Scalar = double>
struct EnsembleReport {
  Scalar gamma{};
  Scalar nu{};
  Scalar population{};
  Scalar entropy{};
  Scalar chi{};
  ThreeStateWeights<Scalar> weights{};
};

namespace detail {

inline void require_capacity(int q) {
  if (q < 1)
    throw InvalidInput("q must be a positive integer");
}

template <typename Scalar>
void require_finite(const Scalar &value, const char *name) {
  using std::isfinite;
  if (!isfinite(value))
    throw InvalidInput(std::string(name) + " must be finite");
}

// e = exp(-|x|) in (0, 1]; all weights are rational in e, so nothing
// overflows for any finite x.
template <typename Scalar>
Scalar edge_decay(const Scalar &x) {
  using std::abs;
  using std::exp;
  return exp(-abs(x));
}

} // namespace detail

/// Maximum-entropy weights at multiplier gamma.
template <typename Scalar>
ThreeStateWeights<Scalar> weights_from_gamma(int q, Scalar gamma) {
  detail::require_capacity(q);
  detail::require_finite(gamma, "gamma");
  const Scalar x = Scalar(q) * gamma;
  const Scalar e = detail::edge_decay(x);
  const Scalar denom = Scalar(1) + e + e * e;
  const Scalar dominant = Scalar(1) / denom;
  const Scalar center = e / denom;
  const Scalar minor = (e * e) / denom;
  // gamma > 0 favours the N - q state
  if (x >= 0)
    return {dominant, center, minor};
  return {minor, center, dominant};
}

/// Net transferred charge nu = -2 q sinh(q gamma) / (1 + 2 cosh(q gamma)).
/// Strictly inside (-q, q) and strictly decreasing in gamma.
template <typename Scalar>
Scalar nu_from_gamma(int q, Scalar gamma) {
  using std::abs;
  using std::expm1;
  detail::require_capacity(q);
  detail::require_finite(gamma, "gamma");
  const Scalar x = Scalar(q) * gamma;
  const Scalar e = detail::edge_decay(x);
  // (1 - e^2) / (1 + e + e^2) = |nu| / q
  const Scalar magnitude = -expm1(Scalar(-2) * abs(x)) / (Scalar(1) + e + e * e);
  return x >= 0 ? -Scalar(q) * magnitude : Scalar(q) * magnitude;
}

/// d nu / d gamma = -2 q^2 (2 + cosh x) / (1 + 2 cosh x)^2, written in e = exp(-|x|).
template <typename Scalar>
Scalar dnu_dgamma(int q, Scalar gamma) {
  detail::require_capacity(q);
  const Scalar x = Scalar(q) * gamma;
  const Scalar e = detail::edge_decay(x);
  const Scalar denom = Scalar(1) + e + e * e;
  // (2 + cosh x) / (1 + 2 cosh x)^2 = e (1 + 4e + e^2) / (2 (1 + e + e^2)^2)
  const Scalar q2 = Scalar(q) * Scalar(q);
  return -q2 * e * (Scalar(1) + Scalar(4) * e + e * e) / (denom * denom);
}

namespace detail {

// Solve (e + 2 e^2) / (1 + e + e^2) = gap for a = |x| >= 0, where gap = 1 - |nu|/q.
// Works on the logarithm of the gap, which stays well conditioned at the edge.
template <typename Scalar>
Scalar edge_magnitude(const Scalar &gap) {
  using std::log;
  using std::log1p;
  using std::exp;
  using std::abs;
  const Scalar log_gap = log(gap);
  auto f_df = [&](const Scalar &a) {
    const Scalar e = exp(-a);
    const Scalar f = -a + log1p(Scalar(2) * e) - log1p(e + e * e) - log_gap;
    const Scalar df = Scalar(-1) - Scalar(2) * e / (Scalar(1) + Scalar(2) * e) +
                      (e + Scalar(2) * e * e) / (Scalar(1) + e + e * e);
    return std::pair<Scalar, Scalar>{f, df};
  };
  // f(0) = ln(1) - ln(gap) > 0 and f(a) -> -a - ln(gap); expand until negative
  Scalar hi = -log_gap + Scalar(2);
  while (f_df(hi).first > 0)
    hi *= 2;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  auto done = [&](const Scalar &f, const Scalar &step) {
    return abs(f) <= Scalar(4) * eps || abs(step) <= Scalar(4) * eps * (Scalar(1) + hi);
  };
  auto result = root::safeguarded_newton(f_df, Scalar(0), hi, -log_gap, done);
  if (!result.converged)
    throw ConvergenceFailure("gamma_from_nu: edge inversion did not converge");
  return result.x;
}

} // namespace detail

/// Inverse of nu_from_gamma. Requires |nu| < q strictly; the edge values
/// +/- q are never reached at finite gamma.
template <typename Scalar>
Scalar gamma_from_nu(int q, Scalar nu) {
  using std::abs;
  using std::log;
  using std::sqrt;
  detail::require_capacity(q);
  detail::require_finite(nu, "nu");
  const Scalar r = nu / Scalar(q);
  if (!(abs(r) < Scalar(1)))
    throw OutOfRange("nu must lie strictly inside (-q, q)");
  if (r == Scalar(0))
    return Scalar(0);

  if (abs(r) > Scalar(1) - Scalar(1e-6)) {
    // q - |nu| is exact here, so the gap keeps full relative precision
    const Scalar a = detail::edge_magnitude((Scalar(q) - abs(nu)) / Scalar(q));
    // nu > 0 (electron gain) needs gamma < 0
    return (r > 0 ? -a : a) / Scalar(q);
  }

  // (1 + r) u^2 + r u + (r - 1) = 0 with u = exp(q gamma)
  const Scalar root = sqrt(Scalar(4) - Scalar(3) * r * r);
  const Scalar u = r <= 0 ? (root - r) / (Scalar(2) * (Scalar(1) + r))
                          : Scalar(2) * (Scalar(1) - r) / (r + root);
  Scalar gamma = log(u) / Scalar(q);
  // one Newton step on the forward map
  const Scalar slope = dnu_dgamma(q, gamma);
  if (slope != Scalar(0))
    gamma -= (nu_from_gamma(q, gamma) - nu) / slope;
  return gamma;
}

/// Edge weights from the central weight and the net charge:
/// w_{N -/+ q} = (1 -/+ nu/q - w_center) / 2. Returns {minus, plus}.
template <typename Scalar>
std::pair<Scalar, Scalar> edge_weights_algebraic(Scalar w_center, Scalar nu, int q) {
  using std::abs;
  detail::require_capacity(q);
  detail::require_finite(w_center, "w_center");
  detail::require_finite(nu, "nu");
  const Scalar r = nu / Scalar(q);
  if (abs(r) > Scalar(1))
    throw OutOfRange("|nu| must not exceed q");
  // a few ulps of slack absorb rounding in nu/q at the feasibility boundary
  const Scalar slack = Scalar(4) * std::numeric_limits<Scalar>::epsilon();
  if (w_center < Scalar(0) || w_center > Scalar(1) - abs(r) + slack)
    throw Infeasible("w_center must lie in [0, 1 - |nu|/q]");
  using std::max;
  return {max(Scalar(0), (Scalar(1) - r - w_center) / Scalar(2)),
          max(Scalar(0), (Scalar(1) + r - w_center) / Scalar(2))};
}

/// Shannon entropy in nats with 0 ln 0 = 0.
template <typename Scalar>
Scalar entropy(const ThreeStateWeights<Scalar> &w) {
  using std::log;
  auto term = [](const Scalar &p) { return p > Scalar(0) ? -p * log(p) : Scalar(0); };
  return term(w.minus) + term(w.center) + term(w.plus);
}

template <typename Scalar>
EnsembleReport<Scalar> report(const DomainSpec &domain, Scalar gamma) {
  EnsembleReport<Scalar> out;
  out.gamma = gamma;
  out.weights = weights_from_gamma(domain.q, gamma);
  out.nu = nu_from_gamma(domain.q, gamma);
  out.population = Scalar(domain.N) + out.nu;
  out.entropy = entropy(out.weights);
  out.chi = -gamma;
  return out;
}

} // namespace maxent
