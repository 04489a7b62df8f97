#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsparse::cli {

using Json = nlohmann::json;

/// Typed view of one JSON object of an experiment config. Every value read
/// (or defaulted) is also written to an "effective" object, which becomes the
/// config echo in the manifest; finish() rejects keys that were never read.
class ConfigSection {
 public:
  /// `effective` must outlive the section.
  ConfigSection(const Json& source, Json& effective, std::string path);

  template <class T>
  T get(const std::string& key, const T& fallback) {
    const Json* v = lookup(key);
    T out = v ? convert<T>(*v, key) : fallback;
    (*effective_)[key] = out;
    return out;
  }

  template <class T>
  T required(const std::string& key) {
    const Json* v = lookup(key);
    if (!v) missing(key);
    T out = convert<T>(*v, key);
    (*effective_)[key] = out;
    return out;
  }

  bool has(const std::string& key) const;
  /// Child object; an absent key reads as {}.
  ConfigSection section(const std::string& key);
  /// Children of an array of objects; an absent key gives `fallback`.
  std::vector<ConfigSection> sections(const std::string& key, const Json& fallback);

  /// Throws ParseError naming any key that no getter asked for.
  void finish() const;
  const std::string& path() const { return path_; }

 private:
  const Json* lookup(const std::string& key);
  [[noreturn]] void missing(const std::string& key) const;
  [[noreturn]] void type_error(const std::string& key, const std::string& what) const;

  template <class T>
  T convert(const Json& v, const std::string& key) const {
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!v.is_number()) type_error(key, "a number");
      } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
        if (!v.is_number_integer()) type_error(key, "an integer");
        if constexpr (std::is_unsigned_v<T>) {
          if (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)
            type_error(key, "a non-negative integer");
        }
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) type_error(key, "a boolean");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) type_error(key, "a string");
      }
      return v.get<T>();
    } catch (const nlohmann::json::exception& e) {
      type_error(key, std::string("a value of the right type (") + e.what() + ")");
    }
  }

  const Json* source_;
  Json* effective_;
  std::string path_;
  std::set<std::string> seen_;
};

/// Reads a JSON document; a ResultBundle manifest is accepted in place of a
/// config and yields its "config" member. Throws ParseError.
Json load_config_file(const std::string& path, const std::string& command);

}  // namespace qsparse::cli
