#include "maxent/domain_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace maxent::io {

namespace {

using nlohmann::json;

// byte offset -> "line:column", both 1-based
std::string position_of(const std::string &text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

int integer_field(const json &entry, const char *name, const std::string &path) {
  const auto it = entry.find(name);
  if (it == entry.end())
    throw ConfigError(path + ": missing required field \"" + name + "\"");
  if (!it->is_number_integer())
    throw ConfigError(path + "." + name + ": must be an integer");
  const auto value = it->get<long long>();
  if (value < -1'000'000'000LL || value > 1'000'000'000LL)
    throw ConfigError(path + "." + name + ": out of range");
  return static_cast<int>(value);
}

} // namespace

std::vector<DomainSpec> parse_domains(const std::string &text, const std::string &source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    // e.byte is 1-based and points just past the offending character
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ConfigError(source + ":" + position_of(text, at) + ": invalid JSON: " + e.what());
  }

  if (!doc.is_object())
    throw ConfigError(source + ": top level must be an object");
  for (const auto &[key, value] : doc.items()) {
    (void)value;
    if (key != "domains")
      throw ConfigError(source + ": unknown field \"" + key + "\"");
  }
  const auto list = doc.find("domains");
  if (list == doc.end())
    throw ConfigError(source + ": missing required field \"domains\"");
  if (!list->is_array())
    throw ConfigError(source + ": \"domains\" must be an array");
  if (list->empty())
    throw ConfigError(source + ": \"domains\" must not be empty");

  std::vector<DomainSpec> domains;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto &entry = (*list)[i];
    const std::string path = source + ": domains[" + std::to_string(i) + "]";
    if (!entry.is_object())
      throw ConfigError(path + ": must be an object");
    for (const auto &[key, value] : entry.items()) {
      (void)value;
      if (key != "label" && key != "N" && key != "q")
        throw ConfigError(path + ": unknown field \"" + key + "\"");
    }
    const auto label = entry.find("label");
    if (label == entry.end())
      throw ConfigError(path + ": missing required field \"label\"");
    if (!label->is_string())
      throw ConfigError(path + ".label: must be a string");
    const int N = integer_field(entry, "N", path);
    const int q = integer_field(entry, "q", path);
    try {
      domains.push_back(DomainSpec::make(label->get<std::string>(), N, q));
    } catch (const InvalidInput &e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
  return domains;
}

std::vector<DomainSpec> load_domains(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open domain file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw IoError("cannot read domain file '" + path + "'");
  return parse_domains(buf.str(), path);
}

} // namespace maxent::io
