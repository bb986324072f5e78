#include "subsum/store.h"

#include <mutex>

namespace subsum {

namespace {

std::mutex& store_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<PolyStore>& store_slot() {
  static std::shared_ptr<PolyStore> slot;
  return slot;
}

}  // namespace

std::string CacheKey::to_string() const {
  return object + "/" + family + "/" + std::to_string(n) + "/" + strategy;
}

void install_poly_store(std::shared_ptr<PolyStore> store) {
  std::lock_guard lock(store_mutex());
  store_slot() = std::move(store);
}

std::shared_ptr<PolyStore> installed_poly_store() {
  std::lock_guard lock(store_mutex());
  return store_slot();
}

}  // namespace subsum
