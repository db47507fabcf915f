#pragma once
#include <iosfwd>
#include <vector>

namespace maxent::io {

/// One gamma sample of the three-state ensemble.
struct SweepRow {
  double gamma = 0;
  double w_minus = 0;
  double w_center = 0;
  double w_plus = 0;
  double nu_over_q = 0;
  double entropy = 0;
};

inline constexpr const char *kSweepHeader = "gamma,w_minus,w_center,w_plus,nu_over_q,entropy";

/// `steps` rows on a uniform grid covering [gamma_min, gamma_max]
/// inclusive. The grid is exactly antisymmetric when gamma_min == -gamma_max.
std::vector<SweepRow> compute_sweep(int q, double gamma_min, double gamma_max, int steps);

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);
std::vector<SweepRow> read_csv(std::istream &in);

/// Two stacked line charts: the three weights, and nu/q, against gamma.
void write_svg(std::ostream &out, const std::vector<SweepRow> &rows, int q);

} // namespace maxent::io
