#pragma once

#include <array>
#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "antonim/core.hpp"

namespace antonim {

enum class Threading : std::uint8_t { single, shared };

/// Memo table keyed by canonical position. Entries are written once and
/// never change; a second insert of the same key keeps the first value.
/// With Threading::shared, lookups take a shard's shared lock and inserts its
/// exclusive lock. With Threading::single no lock is touched.
template <class Value>
class WriteOnceCache {
 public:
  explicit WriteOnceCache(Threading mode = Threading::single) : mode_(mode) {}

  WriteOnceCache(const WriteOnceCache&) = delete;
  WriteOnceCache& operator=(const WriteOnceCache&) = delete;

  Threading threading() const noexcept { return mode_; }

  std::optional<Value> find(const CanonicalPosition& key) const {
    const Shard& shard = shard_for(key);
    if (mode_ == Threading::single) return lookup(shard, key);
    std::shared_lock lock(shard.mutex);
    return lookup(shard, key);
  }

  /// Returns the value stored for `key` after the call, which is `value`
  /// unless another writer got there first.
  Value insert(const CanonicalPosition& key, Value value) {
    Shard& shard = shard_for(key);
    if (mode_ == Threading::single) return shard.map.try_emplace(key, value).first->second;
    std::unique_lock lock(shard.mutex);
    return shard.map.try_emplace(key, value).first->second;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const Shard& s : shards_) {
      if (mode_ == Threading::single) {
        n += s.map.size();
      } else {
        std::shared_lock lock(s.mutex);
        n += s.map.size();
      }
    }
    return n;
  }

 private:
  static constexpr std::size_t kShards = 16;

  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<CanonicalPosition, Value, CanonicalPositionHash> map;
  };

  static std::optional<Value> lookup(const Shard& shard, const CanonicalPosition& key) {
    auto it = shard.map.find(key);
    if (it == shard.map.end()) return std::nullopt;
    return it->second;
  }

  Shard& shard_for(const CanonicalPosition& key) {
    return shards_[(CanonicalPositionHash{}(key) >> 7) % kShards];
  }
  const Shard& shard_for(const CanonicalPosition& key) const {
    return shards_[(CanonicalPositionHash{}(key) >> 7) % kShards];
  }

  Threading mode_;
  std::array<Shard, kShards> shards_;
};

}  // namespace antonim
