#include "lma/util.hpp"

#include <atomic>

namespace lma {

namespace {
std::atomic<int> g_jobs{0};
}

int default_jobs() {
  int j = g_jobs.load();
  if (j > 0) return j;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void set_default_jobs(int jobs) { g_jobs.store(jobs); }

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn,
                  int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  if (n == 0) return;
  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  if (nthreads <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(nthreads);
  std::size_t chunk = (n + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t b = t * chunk;
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace lma
