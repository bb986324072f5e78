#include "cache.h"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace subsum::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string payload_of(const std::vector<std::string>& coeffs) {
  std::string out;
  for (const auto& c : coeffs) {
    out += c;
    out += ',';
  }
  return out;
}

std::string safe_component(const std::string& s) {
  std::string out;
  for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
  return out;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 0xf];
  }
  return out;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "subsum";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "subsum";
  return fs::temp_directory_path() / "subsum-cache";
}

DiskStore::DiskStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskStore::path_for(const CacheKey& key) const {
  const std::string digest = sha256_hex(key.to_string()).substr(0, 16);
  return dir_ / (safe_component(key.object) + "-" + safe_component(key.family) + "-" + std::to_string(key.n) + "-" +
                 digest + ".json");
}

std::optional<DensePoly> DiskStore::load(const CacheKey& key) {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto doc = ordered_json::parse(in);
    if (doc.at("version").get<std::string>() != kCacheVersion) return std::nullopt;
    const auto& k = doc.at("key");
    if (k.at("object").get<std::string>() != key.object || k.at("family").get<std::string>() != key.family ||
        k.at("n").get<std::int64_t>() != key.n || k.at("strategy").get<std::string>() != key.strategy) {
      return std::nullopt;
    }
    const auto coeffs = doc.at("coeffs").get<std::vector<std::string>>();
    if (doc.at("hash").get<std::string>() != sha256_hex(payload_of(coeffs))) return std::nullopt;
    std::vector<BigInt> values;
    values.reserve(coeffs.size());
    for (const auto& c : coeffs) values.push_back(from_decimal(c));
    return DensePoly(std::move(values));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void DiskStore::save(const CacheKey& key, const DensePoly& value) {
  std::vector<std::string> coeffs;
  coeffs.reserve(value.size());
  for (const auto& c : value.coeffs()) coeffs.push_back(c.get_str());
  ordered_json doc;
  doc["version"] = kCacheVersion;
  doc["key"] = {{"object", key.object}, {"family", key.family}, {"n", key.n}, {"strategy", key.strategy}};
  doc["coeffs"] = coeffs;
  doc["hash"] = sha256_hex(payload_of(coeffs));

  std::lock_guard lock(write_mutex_);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path target = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp" << std::this_thread::get_id();
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // the cache is advisory
    out << doc.dump() << '\n';
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace subsum::cli
