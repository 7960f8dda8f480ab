#pragma once

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <vector>

namespace krall {

// Worker count from KRALL_WORKERS (default 1).
inline int worker_count() {
  const char* env = std::getenv("KRALL_WORKERS");
  if (!env) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (...) {
    return 1;
  }
}

// Evaluates fn(i) for i in [0, count) and returns the results in index order.
template <class Fn>
auto parallel_map(int count, Fn fn) -> std::vector<decltype(fn(0))> {
  using R = decltype(fn(0));
  std::vector<R> out(count);
  const int workers = std::min(worker_count(), std::max(count, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (int w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < count; i += workers) out[i] = fn(i);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

} // namespace krall
