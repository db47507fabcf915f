#include "maxent/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "maxent/errors.hpp"

namespace maxent::io {

std::string format_number(double value) {
  if (value == 0.0)
    value = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string &text) {
  const char *first = text.data();
  const char *last = first + text.size();
  if (first != last && *first == '+')
    ++first;
  double value = 0;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last)
    throw InvalidInput("not a number: '" + text + "'");
  return value;
}

} // namespace maxent::io
