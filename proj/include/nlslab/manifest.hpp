#pragma once
/// \file manifest.hpp
/// Run manifests: a minimal `key = value` configuration grammar.
///
///   - one entry per line:  key = value
///   - '#' starts a comment (whole line or trailing)
///   - blank lines ignored; whitespace around keys/values trimmed
///   - duplicate keys are an error (they are always typos)
///
/// Typed getters validate the stored text and throw InputError naming the
/// key on malformed values; the fallback is returned for absent keys.

#include <cstdint>
#include <map>
#include <string>

#include "nlslab/common.hpp"

namespace nlslab {

class Manifest {
 public:
  Manifest() = default;

  static Manifest parse_file(const std::string& path);
  static Manifest parse_string(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace nlslab
