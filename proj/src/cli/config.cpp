#include "qsparse/cli/config.hpp"

#include <fstream>

#include "qsparse/core/errors.hpp"

namespace qsparse::cli {

ConfigSection::ConfigSection(const Json& source, Json& effective, std::string path)
    : source_(&source), effective_(&effective), path_(std::move(path)) {
  if (!source.is_object()) throw ParseError("config section '" + path_ + "' must be a JSON object");
  if (!effective_->is_object()) *effective_ = Json::object();
}

const Json* ConfigSection::lookup(const std::string& key) {
  seen_.insert(key);
  auto it = source_->find(key);
  if (it == source_->end() || it->is_null()) return nullptr;
  return &*it;
}

bool ConfigSection::has(const std::string& key) const {
  auto it = source_->find(key);
  return it != source_->end() && !it->is_null();
}

void ConfigSection::missing(const std::string& key) const {
  throw ParseError("config key '" + path_ + key + "' is required");
}

void ConfigSection::type_error(const std::string& key, const std::string& what) const {
  throw ParseError("config key '" + path_ + key + "' must be " + what);
}

ConfigSection ConfigSection::section(const std::string& key) {
  static const Json empty = Json::object();
  const Json* v = lookup(key);
  (*effective_)[key] = Json::object();
  return ConfigSection(v ? *v : empty, (*effective_)[key], path_ + key + ".");
}

std::vector<ConfigSection> ConfigSection::sections(const std::string& key, const Json& fallback) {
  const Json* v = lookup(key);
  const Json& arr = v ? *v : fallback;
  if (!arr.is_array()) type_error(key, "an array of objects");
  Json& eff = (*effective_)[key];
  eff = Json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) eff.push_back(Json::object());
  std::vector<ConfigSection> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.emplace_back(arr[i], eff[i], path_ + key + "[" + std::to_string(i) + "].");
  return out;
}

void ConfigSection::finish() const {
  std::string unknown;
  for (const auto& [k, v] : source_->items())
    if (!seen_.count(k)) unknown += (unknown.empty() ? "" : ", ") + path_ + k;
  if (!unknown.empty()) throw ParseError("unknown config key(s): " + unknown);
}

Json load_config_file(const std::string& path, const std::string& command) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw ParseError("config file '" + path + "' must hold a JSON object");
  if (doc.contains("manifest_version")) {
    const std::string cmd = doc.value("command", "");
    if (cmd != command)
      throw ParseError("manifest '" + path + "' belongs to command '" + cmd + "', not '" + command + "'");
    if (!doc.contains("config")) throw ParseError("manifest '" + path + "' has no config echo");
    return doc["config"];
  }
  return doc;
}

}  // namespace qsparse::cli
