#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace irea {

/// Flat key=value configuration with dotted keys ("train.steps=2000").
/// Consumers take keys through typed getters; finish() rejects anything
/// nobody consumed, so typos in files or --set overrides fail loudly.
class ConfigMap {
 public:
  ConfigMap() = default;

  static ConfigMap from_file(const std::string& path);

  void set(const std::string& key, const std::string& value);
  /// Applies one "key=value" override string.
  void apply_override(const std::string& kv);

  bool has(const std::string& key) const;

  std::string take_str(const std::string& key, const std::string& def);
  int take_int(const std::string& key, int def);
  long long take_i64(const std::string& key, long long def);
  double take_double(const std::string& key, double def);
  bool take_bool(const std::string& key, bool def);

  /// Throws ConfigError listing keys no consumer recognized.
  void finish() const;

  /// All key=value pairs, sorted by key (the resolved-config dump).
  std::vector<std::pair<std::string, std::string>> items() const;

  /// Writes the resolved configuration to a file, one key=value per line.
  void write_resolved(const std::string& path) const;

 private:
  std::map<std::string, std::string> kv_;
  mutable std::set<std::string> consumed_;
};

}  // namespace irea
