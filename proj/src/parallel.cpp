#include "dbo/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace dbo {

namespace {

int initialThreads() {
  if (const char* env = std::getenv("DBO_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int> g_maxThreads{initialThreads()};

}  // namespace

int maxThreads() { return g_maxThreads.load(); }

void setMaxThreads(int n) { g_maxThreads.store(std::max(1, n)); }

void forBlocks(std::int64_t n, std::int64_t blockSize,
               const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  if (blockSize < 1) blockSize = 1;
  const std::int64_t nBlocks = (n + blockSize - 1) / blockSize;
  const int workers = static_cast<int>(std::min<std::int64_t>(maxThreads(), nBlocks));

  auto runBlock = [&](std::int64_t b) {
    const std::int64_t begin = b * blockSize;
    const std::int64_t end = std::min(n, begin + blockSize);
    fn(static_cast<std::size_t>(b), begin, end);
  };

  if (workers <= 1) {
    for (std::int64_t b = 0; b < nBlocks; ++b) runBlock(b);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::int64_t b = next.fetch_add(1);
        if (b >= nBlocks) return;
        runBlock(b);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace dbo
