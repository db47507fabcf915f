#pragma once
#include <string>

namespace maxent::io {

/// Locale-independent decimal text with at most 12 significant digits
/// (printf "%.12g" semantics). Negative zero prints as "0".
std::string format_number(double value);

/// Strict locale-independent parse of a whole string; throws InvalidInput.
double parse_number(const std::string &text);

} // namespace maxent::io
