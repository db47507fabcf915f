#pragma once
#include <string>
#include <vector>

#include "maxent/ensemble.hpp"

namespace maxent::io {

/// Parses `{"domains":[{"label":str,"N":int,"q":int}, ...]}`.
/// Unknown fields are rejected. Throws ConfigError with a line:column
/// position for syntax errors and a field path for schema violations.
std::vector<DomainSpec> parse_domains(const std::string &text, const std::string &source = "<input>");

/// Reads and parses a domain file. Throws IoError if it cannot be read.
std::vector<DomainSpec> load_domains(const std::string &path);

} // namespace maxent::io
