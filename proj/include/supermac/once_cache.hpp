#pragma once

// Thread-safe memoization: the first caller for a key computes the value,
// concurrent callers for the same key wait for it, failures are not cached.

#include <functional>
#include <future>
#include <map>
#include <mutex>

namespace supermac {

template <class Key, class Value>
class OnceCache {
public:
    Value get(const Key& key, const std::function<Value()>& make) {
        std::promise<Value> promise;
        std::shared_future<Value> fut;
        bool owner = false;
        {
            std::lock_guard lock(mu_);
            if (auto it = map_.find(key); it != map_.end()) {
                fut = it->second;
            } else {
                fut = promise.get_future().share();
                map_.emplace(key, fut);
                owner = true;
            }
        }
        if (owner) {
            try {
                promise.set_value(make());
            } catch (...) {
                promise.set_exception(std::current_exception());
                std::lock_guard lock(mu_);
                map_.erase(key);
            }
        }
        return fut.get();
    }

private:
    std::mutex mu_;
    std::map<Key, std::shared_future<Value>> map_;
};

}  // namespace supermac
