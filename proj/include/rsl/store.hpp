// Copyright 2026 The RSL Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Content-addressed JSON result store. One file per key under the root:
//
//   <root>/<key>.json          {"format_version": 1, "key": ..., "payload": ...}
//   <root>/tmp/                staging area for write-then-rename
//   <root>/quarantine/         entries that failed to parse or validate
//
// Keys are built from canonical codes, so isomorphic inputs share entries.

#ifndef RSL_STORE_HPP_
#define RSL_STORE_HPP_

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <nlohmann/json.hpp>

#include "rsl/canonical.hpp"

namespace rsl {

inline constexpr int kStoreFormatVersion = 1;

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string ramsey_key(const CanonicalCode& g, const CanonicalCode& h) {
  return h < g ? "ramsey-" + h.hex() + "-" + g.hex() : "ramsey-" + g.hex() + "-" + h.hex();
}
inline std::string verdict_key(const CanonicalCode& g) { return "verdict-" + g.hex(); }
inline std::string candidates_key(const CanonicalCode& g) { return "candidates-" + g.hex(); }

class ResultStore {
 public:
  using Validator = std::function<bool(const nlohmann::json&)>;

  explicit ResultStore(std::filesystem::path root) : root_(std::move(root)) {}

  // RSL_STORE, else ./.rsl-store.
  static ResultStore from_environment() {
    const char* env = std::getenv("RSL_STORE");
    return ResultStore(env && *env ? std::filesystem::path(env) : std::filesystem::path(".rsl-store"));
  }

  const std::filesystem::path& root() const { return root_; }

  std::filesystem::path path_for(const std::string& key) const {
    check_key(key);
    return root_ / (key + ".json");
  }

  // Absent entries give nullopt. Entries that do not parse, carry the wrong
  // version or key, or fail validate are moved to quarantine/ and reported
  // absent.
  std::optional<nlohmann::json> get(const std::string& key, const Validator& validate = {}) const {
    const auto path = path_for(key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
      if (ec) throw StoreError("cannot stat " + path.string() + ": " + ec.message());
      return std::nullopt;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StoreError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw StoreError("read failed on " + path.string());
    in.close();

    const auto doc = nlohmann::json::parse(buffer.str(), nullptr, false);
    const bool ok = !doc.is_discarded() && doc.is_object() &&
                    doc.value("format_version", -1) == kStoreFormatVersion &&
                    doc.value("key", std::string()) == key && doc.contains("payload") &&
                    (!validate || validate(doc.at("payload")));
    if (!ok) {
      quarantine(path, key);
      return std::nullopt;
    }
    return std::optional<nlohmann::json>(std::in_place, doc.at("payload"));
  }

  // Atomic: the entry is written in full to a staging file and renamed into
  // place. Concurrent writers of one key leave exactly one complete document.
  void put(const std::string& key, const nlohmann::json& payload) const {
    const auto path = path_for(key);
    const auto staging = root_ / "tmp";
    create_directories(staging);
    const auto tmp = staging / (key + "." + std::to_string(::getpid()) + "." +
                                std::to_string(next_serial()) + ".tmp");
    const nlohmann::json doc = {
        {"format_version", kStoreFormatVersion}, {"key", key}, {"payload", payload}};
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw StoreError("cannot create " + tmp.string());
      out << doc.dump() << '\n';
      out.flush();
      if (!out) throw StoreError("write failed on " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw StoreError("cannot move entry into place at " + path.string());
    }
  }

 private:
  static void check_key(const std::string& key) {
    if (key.empty()) throw StoreError("empty store key");
    for (char c : key) {
      const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '-' || c == '_';
      if (!ok) throw StoreError("invalid store key '" + key + "'");
    }
  }

  static void create_directories(const std::filesystem::path& p) {
    std::error_code ec;
    std::filesystem::create_directories(p, ec);
    if (ec) throw StoreError("cannot create " + p.string() + ": " + ec.message());
  }

  static std::uint64_t next_serial() {
    static std::atomic<std::uint64_t> serial{0};
    return serial++;
  }

  void quarantine(const std::filesystem::path& path, const std::string& key) const {
    const auto dir = root_ / "quarantine";
    create_directories(dir);
    const auto target = dir / (key + "." + std::to_string(::getpid()) + "." +
                               std::to_string(next_serial()) + ".json");
    std::error_code ec;
    std::filesystem::rename(path, target, ec);
    // Another process may have quarantined or replaced it first.
    if (ec && std::filesystem::exists(path)) {
      throw StoreError("cannot quarantine " + path.string() + ": " + ec.message());
    }
  }

  std::filesystem::path root_;
};

}  // namespace rsl

#endif  // RSL_STORE_HPP_
