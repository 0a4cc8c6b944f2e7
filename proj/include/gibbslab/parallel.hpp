// Minimal worker pool: index ranges split into chunks, merged in chunk order
// so results are independent of scheduling.
#pragma once

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gibbslab {

inline int default_workers() {
  if (const char* env = std::getenv("GIBBSLAB_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Applies fn to every index in [0, count) using `workers` threads. fn receives
// (index). Exceptions propagate from the first failing chunk in index order.
template <typename Fn>
void parallel_for(long long count, int workers, Fn&& fn) {
  if (count <= 0) return;
  if (workers <= 1 || count == 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  int n = static_cast<int>(std::min<long long>(workers, count));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(n);
  for (int w = 0; w < n; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (long long i = w; i < count; i += n) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Per-chunk accumulators merged in chunk order. Fn: (index, Acc&) -> void.
template <typename Acc, typename Fn, typename Merge>
Acc parallel_reduce(long long count, int workers, Acc init, Fn&& fn,
                    Merge&& merge) {
  if (count <= 0) return init;
  int n = workers <= 1 ? 1 : static_cast<int>(std::min<long long>(workers, count));
  std::vector<Acc> accs(n, init);
  if (n == 1) {
    for (long long i = 0; i < count; ++i) fn(i, accs[0]);
    return accs[0];
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(n);
  for (int w = 0; w < n; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (long long i = w; i < count; i += n) fn(i, accs[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Acc out = init;
  for (const Acc& a : accs) merge(out, a);
  return out;
}

}  // namespace gibbslab
