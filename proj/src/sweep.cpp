#include "maxent/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "maxent/ensemble.hpp"
#include "maxent/format.hpp"

namespace maxent::io {

std::vector<SweepRow> compute_sweep(int q, double gamma_min, double gamma_max, int steps) {
  if (q < 1)
    throw InvalidInput("q must be a positive integer");
  if (!std::isfinite(gamma_min) || !std::isfinite(gamma_max))
    throw InvalidInput("gamma range must be finite");
  if (!(gamma_min < gamma_max))
    throw InvalidInput("gamma_min must be smaller than gamma_max");
  if (steps < 2)
    throw InvalidInput("steps must be at least 2");

  std::vector<SweepRow> rows;
  rows.reserve(std::size_t(steps));
  const int last = steps - 1;
  for (int i = 0; i < steps; ++i) {
    // weighted endpoints keep the grid symmetric about 0 for symmetric ranges
    const double gamma = (gamma_min * double(last - i) + gamma_max * double(i)) / double(last);
    const auto w = weights_from_gamma(q, gamma);
    rows.push_back({gamma, w.minus, w.center, w.plus, nu_from_gamma(q, gamma) / double(q),
                    entropy(w)});
  }
  return rows;
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
  out << kSweepHeader << '\n';
  for (const auto &r : rows) {
    out << format_number(r.gamma) << ',' << format_number(r.w_minus) << ','
        << format_number(r.w_center) << ',' << format_number(r.w_plus) << ','
        << format_number(r.nu_over_q) << ',' << format_number(r.entropy) << '\n';
  }
}

std::vector<SweepRow> read_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader)
    throw InvalidInput("sweep CSV: missing or unexpected header");
  std::vector<SweepRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      fields.push_back(parse_number(cell));
    if (fields.size() != 6)
      throw InvalidInput("sweep CSV line " + std::to_string(line_no) + ": expected 6 fields");
    rows.push_back({fields[0], fields[1], fields[2], fields[3], fields[4], fields[5]});
  }
  return rows;
}

namespace {

struct Panel {
  double left, top, width, height;
  double x_min, x_max, y_min, y_max;

  double px(double x) const { return left + (x - x_min) / (x_max - x_min) * width; }
  double py(double y) const { return top + (y_max - y) / (y_max - y_min) * height; }
};

template <typename Get>
void polyline(std::ostream &out, const Panel &p, const std::vector<SweepRow> &rows, Get get,
              const char *colour) {
  out << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i)
      out << ' ';
    out << format_number(p.px(rows[i].gamma)) << ',' << format_number(p.py(get(rows[i])));
  }
  out << "\"/>\n";
}

void axes(std::ostream &out, const Panel &p, const std::string &y_label) {
  const double y0 = p.py(std::clamp(0.0, p.y_min, p.y_max));
  out << "  <rect x=\"" << p.left << "\" y=\"" << p.top << "\" width=\"" << p.width
      << "\" height=\"" << p.height << "\" fill=\"none\" stroke=\"#444\"/>\n";
  out << "  <line x1=\"" << p.left << "\" y1=\"" << format_number(y0) << "\" x2=\""
      << p.left + p.width << "\" y2=\"" << format_number(y0)
      << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  if (p.x_min < 0 && p.x_max > 0) {
    const double x0 = p.px(0.0);
    out << "  <line x1=\"" << format_number(x0) << "\" y1=\"" << p.top << "\" x2=\""
        << format_number(x0) << "\" y2=\"" << p.top + p.height
        << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  const double label_y = p.top + p.height + 16;
  out << "  <text x=\"" << p.left << "\" y=\"" << label_y << "\" font-size=\"11\">"
      << format_number(p.x_min) << "</text>\n";
  out << "  <text x=\"" << p.left + p.width << "\" y=\"" << label_y
      << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(p.x_max) << "</text>\n";
  out << "  <text x=\"" << p.left + p.width / 2 << "\" y=\"" << label_y
      << "\" font-size=\"12\" text-anchor=\"middle\">gamma</text>\n";
  out << "  <text x=\"" << p.left - 6 << "\" y=\"" << p.top + 4
      << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(p.y_max) << "</text>\n";
  out << "  <text x=\"" << p.left - 6 << "\" y=\"" << p.top + p.height
      << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(p.y_min) << "</text>\n";
  out << "  <text x=\"" << p.left << "\" y=\"" << p.top - 8 << "\" font-size=\"13\">" << y_label
      << "</text>\n";
}

} // namespace

void write_svg(std::ostream &out, const std::vector<SweepRow> &rows, int q) {
  if (rows.size() < 2)
    throw InvalidInput("write_svg: at least two rows are required");
  const double x_min = rows.front().gamma;
  const double x_max = rows.back().gamma;
  const Panel weights{60, 40, 520, 220, x_min, x_max, 0.0, 1.0};
  const Panel charge{60, 340, 520, 220, x_min, x_max, -1.0, 1.0};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"600\" "
         "viewBox=\"0 0 640 600\" font-family=\"sans-serif\">\n";
  out << "  <rect width=\"640\" height=\"600\" fill=\"white\"/>\n";
  axes(out, weights, "weights (q = " + std::to_string(q) + ")");
  polyline(out, weights, rows, [](const SweepRow &r) { return r.w_minus; }, "#1f77b4");
  polyline(out, weights, rows, [](const SweepRow &r) { return r.w_center; }, "#2ca02c");
  polyline(out, weights, rows, [](const SweepRow &r) { return r.w_plus; }, "#d62728");
  out << "  <text x=\"590\" y=\"60\" font-size=\"11\" fill=\"#1f77b4\" text-anchor=\"end\">N-q</text>\n";
  out << "  <text x=\"590\" y=\"75\" font-size=\"11\" fill=\"#2ca02c\" text-anchor=\"end\">N</text>\n";
  out << "  <text x=\"590\" y=\"90\" font-size=\"11\" fill=\"#d62728\" text-anchor=\"end\">N+q</text>\n";
  axes(out, charge, "nu / q");
  polyline(out, charge, rows, [](const SweepRow &r) { return r.nu_over_q; }, "#000000");
  out << "</svg>\n";
}

} // namespace maxent::io
