#pragma once
// Test-only reference computations, independent of the library code paths:
// the textbook hyperbolic formulas evaluated in 50-digit decimal arithmetic,
// and plain bisection on the forward map.

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace oracle {

using hp = boost::multiprecision::cpp_dec_float_50;

struct Weights {
  double minus, center, plus;
};

// w_center = 1/(1 + 2 cosh(q g)), w_(N-/+q) = exp(+/- q g) w_center
inline Weights weights(int q, double gamma) {
  const hp x = hp(q) * hp(gamma);
  const hp c = 1 / (1 + 2 * cosh(x));
  return {static_cast<double>(exp(x) * c), static_cast<double>(c), static_cast<double>(exp(-x) * c)};
}

// nu = -2 q sinh(q g) / (1 + 2 cosh(q g))
inline double nu(int q, double gamma) {
  const hp x = hp(q) * hp(gamma);
  return static_cast<double>(-2 * hp(q) * sinh(x) / (1 + 2 * cosh(x)));
}

inline hp nu_hp(int q, const hp &gamma) {
  const hp x = hp(q) * gamma;
  return -2 * hp(q) * sinh(x) / (1 + 2 * cosh(x));
}

// gamma with nu(q, gamma) = target by bisection in 50-digit arithmetic
inline double gamma_for_nu(int q, double target) {
  hp lo = -60, hi = 60; // nu(lo) > target > nu(hi)
  const hp t(target);
  for (int i = 0; i < 200; ++i) {
    const hp mid = (lo + hi) / 2;
    if (nu_hp(q, mid) > t)
      lo = mid;
    else
      hi = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

inline double entropy(double a, double b, double c) {
  auto t = [](double p) { return p > 0 ? -p * std::log(p) : 0.0; };
  return t(a) + t(b) + t(c);
}

// Frozen 40-digit values at q = 1, gamma = 1 (and derived cases).
inline constexpr double kWMinus = 0.66524095577482188953;
inline constexpr double kWCenter = 0.24472847105479765247;
inline constexpr double kWPlus = 0.090030573170380457998;
inline constexpr double kNu11 = -0.57521038260444143153;      // q=1, gamma=1
inline constexpr double kNu21 = -1.7018741844417362096;       // q=2, gamma=1
inline constexpr double kNuPair = -2.2770845670461776412;     // kNu11 + kNu21
inline constexpr double kEntropy11 = 0.83239558183993887295;
inline constexpr double kMean012 = 0.42478961739555856847;    // 1 + kNu11
inline constexpr double kPartition1 = 4.0861612696304875570;  // 1 + 2 cosh(1)

// 6-digit reference values elsewhere in the tests are not always correctly
// rounded in the last digit, so they are only checked to 1.5e-6
inline constexpr double kLiteralTol = 1.5e-6;

inline std::mt19937_64 &rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

} // namespace oracle
