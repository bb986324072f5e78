#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "subsum/poly.h"

namespace subsum {

/// Identifies one computed object: (object kind, family, n, strategy).
struct CacheKey {
  std::string object;
  std::string family;
  std::int64_t n = 0;
  std::string strategy;

  std::string to_string() const;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

/// Optional persistence behind the in-memory memo tables. Implementations
/// must be thread-safe; a failed load simply returns nullopt.
class PolyStore {
 public:
  virtual ~PolyStore() = default;
  virtual std::optional<DensePoly> load(const CacheKey& key) = 0;
  virtual void save(const CacheKey& key, const DensePoly& value) = 0;
};

/// Installs the process-wide store (nullptr removes it).
void install_poly_store(std::shared_ptr<PolyStore> store);
std::shared_ptr<PolyStore> installed_poly_store();

}  // namespace subsum
