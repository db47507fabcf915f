#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "maxent/domain_file.hpp"
#include "maxent/format.hpp"
#include "maxent/sweep.hpp"
#include "oracle.hpp"

using namespace maxent;
using namespace maxent::io;

namespace {

int count(const std::string &text, const std::string &needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

bool same_to_12_digits(double a, double b) {
  return std::abs(a - b) <= 1e-11 * std::max(std::abs(a), std::abs(b)) + 1e-300;
}

} // namespace

TEST_CASE("format_number") {
  CHECK(format_number(0.05) == "0.05");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-5) == "-5");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(0.1 + 0.2) == "0.3");
  CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("parse_number") {
  CHECK(parse_number("0.25") == 0.25);
  CHECK(parse_number("+2") == 2.0);
  CHECK(parse_number("-1e-3") == -1e-3);
  CHECK_THROWS_AS(parse_number(""), InvalidInput);
  CHECK_THROWS_AS(parse_number("1.0x"), InvalidInput);
  CHECK_THROWS_AS(parse_number("abc"), InvalidInput);
}

TEST_CASE("compute_sweep grid") {
  const auto rows = compute_sweep(1, -5.0, 5.0, 201);
  REQUIRE(rows.size() == 201);
  CHECK(rows.front().gamma == -5.0);
  CHECK(rows.back().gamma == 5.0);
  CHECK(rows[100].gamma == 0.0);
  CHECK(rows[100].w_center == 1.0 / 3.0);
  CHECK(rows[100].w_minus == 1.0 / 3.0);
  CHECK(rows[100].w_plus == 1.0 / 3.0);
  CHECK(rows.back().w_minus > 0.98);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &a = rows[i];
    const auto &b = rows[rows.size() - 1 - i];
    CHECK(a.gamma == -b.gamma);
    CHECK(std::abs(a.nu_over_q + b.nu_over_q) < 1e-12);
    CHECK(std::abs(a.w_plus - b.w_minus) < 1e-12);
    if (i > 0) {
      CHECK(a.nu_over_q < rows[i - 1].nu_over_q);
      CHECK(a.gamma > rows[i - 1].gamma);
    }
    CHECK(a.w_center <= 1.0 / 3.0);
    CHECK(std::abs(a.nu_over_q) < 1.0);
  }
}

TEST_CASE("compute_sweep parameter errors") {
  CHECK_THROWS_AS(compute_sweep(0, -1, 1, 10), InvalidInput);
  CHECK_THROWS_AS(compute_sweep(1, 1, 1, 10), InvalidInput);
  CHECK_THROWS_AS(compute_sweep(1, 2, 1, 10), InvalidInput);
  CHECK_THROWS_AS(compute_sweep(1, -1, 1, 1), InvalidInput);
  CHECK_THROWS_AS(compute_sweep(1, -INFINITY, 1, 10), InvalidInput);
  CHECK(compute_sweep(3, 0.0, 1.0, 2).size() == 2);
}

TEST_CASE("CSV header and round trip to 12 significant digits") {
  for (int trial = 0; trial < 20; ++trial) {
    const int q = oracle::uniform_int(1, 4);
    const double lo = oracle::uniform(-30, 0), hi = oracle::uniform(0.1, 30);
    const auto rows = compute_sweep(q, lo, hi, oracle::uniform_int(2, 300));
    std::stringstream ss;
    write_csv(ss, rows);
    const std::string text = ss.str();
    CHECK(text.rfind("gamma,w_minus,w_center,w_plus,nu_over_q,entropy\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    const auto back = read_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      REQUIRE(same_to_12_digits(back[i].gamma, rows[i].gamma));
      REQUIRE(same_to_12_digits(back[i].w_minus, rows[i].w_minus));
      REQUIRE(same_to_12_digits(back[i].w_center, rows[i].w_center));
      REQUIRE(same_to_12_digits(back[i].w_plus, rows[i].w_plus));
      REQUIRE(same_to_12_digits(back[i].nu_over_q, rows[i].nu_over_q));
      REQUIRE(same_to_12_digits(back[i].entropy, rows[i].entropy));
    }
  }
}

TEST_CASE("read_csv rejects malformed input") {
  std::stringstream bad_header("gamma,w\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad_header), InvalidInput);
  std::stringstream short_row(std::string(kSweepHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), InvalidInput);
}

TEST_CASE("SVG has two charts with four curves") {
  std::stringstream ss;
  write_svg(ss, compute_sweep(1, -5, 5, 51), 1);
  const auto svg = ss.str();
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<polyline") == 4);
  CHECK(svg.find("nu / q") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("domain file parsing") {
  const auto ok = parse_domains(R"({"domains":[{"label":"A","N":6,"q":1},{"label":"B","N":8,"q":2}]})");
  REQUIRE(ok.size() == 2);
  CHECK(ok[1].label == "B");
  CHECK(ok[1].N == 8);
  CHECK(ok[1].q == 2);

  auto message = [](const std::string &text) {
    try {
      parse_domains(text, "f.json");
    } catch (const ConfigError &e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"domains":[{"label":"A","N":6}]})") == "f.json: domains[0]: missing required field \"q\"");
  CHECK(message(R"({"domains":[{"label":"A","N":6,"q":1,"Z":3}]})") == "f.json: domains[0]: unknown field \"Z\"");
  CHECK(message(R"({"domains":[{"label":"A","N":6,"q":1.5}]})") == "f.json: domains[0].q: must be an integer");
  CHECK(message(R"({"domains":[{"label":"A","N":6,"q":"1"}]})") == "f.json: domains[0].q: must be an integer");
  CHECK(message(R"({"domains":[{"label":7,"N":6,"q":1}]})") == "f.json: domains[0].label: must be a string");
  CHECK(message(R"({"domains":[]})") == "f.json: \"domains\" must not be empty");
  CHECK(message(R"({"domain":[]})") == "f.json: unknown field \"domain\"");
  CHECK(message(R"({})") == "f.json: missing required field \"domains\"");
  CHECK(message(R"([1,2])") == "f.json: top level must be an object");
  CHECK(message(R"({"domains":[{"label":"A","N":0,"q":1}]})").find("N - q must be >= 0") != std::string::npos);
  CHECK(message(R"({"domains":[{"label":"A","N":3,"q":0}]})").find("q must be >= 1") != std::string::npos);

  const auto syntax = message("{\"domains\": [\n  {\"label\": \"A\", \"N\": 6 \"q\": 1}\n]}");
  CHECK(syntax.rfind("f.json:2:", 0) == 0);
  CHECK(syntax.find("invalid JSON") != std::string::npos);
}

TEST_CASE("load_domains reports unreadable files as I/O errors") {
  CHECK_THROWS_AS(load_domains("/nonexistent/dir/domains.json"), IoError);
}
