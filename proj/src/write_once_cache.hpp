#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace narayana::detail {

// Table where each key is written at most once. Values are computed outside
// the lock; if two threads race on a key the first insertion wins and both
// callers see the same stored value.
template <class Key, class Value>
class WriteOnceCache {
 public:
  template <class Compute>
  std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto fresh = std::make_shared<const Value>(std::invoke(std::forward<Compute>(compute), key));
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(fresh)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> table_;
};

}  // namespace narayana::detail
