#pragma once

#include <cstdint>
#include <functional>

namespace dbo {

/// Worker-thread cap. Initialized from DBO_THREADS (if set) else the hardware
/// count, and adjustable at runtime. Results never depend on it: work is split
/// into fixed-size blocks whose geometry depends only on the problem size, and
/// callers fold per-block results in block order.
int maxThreads();
void setMaxThreads(int n);

/// Runs fn(blockIndex, begin, end) over [0, n) split into blocks of blockSize.
/// Blocks may run on any worker in any order.
void forBlocks(std::int64_t n, std::int64_t blockSize,
               const std::function<void(std::size_t, std::int64_t, std::int64_t)>& fn);

}  // namespace dbo
