#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace turan_forge {

// Worker count for the row-parallel loops. TURAN_FORGE_THREADS overrides
// hardware_concurrency; values < 1 fall back to 1.
inline unsigned worker_count() {
  if (const char* env = std::getenv("TURAN_FORGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs body(begin, end) over a block partition of [0, n). Blocks are a
// function of n and the worker count only, so any state written per index
// is deterministic regardless of scheduling.
template <typename Body>
void parallel_for_blocks(std::uint64_t n, const Body& body) {
  const unsigned workers = worker_count();
  if (workers <= 1 || n < 2) {
    if (n > 0) body(std::uint64_t{0}, n);
    return;
  }
  const std::uint64_t blocks = std::min<std::uint64_t>(workers, n);
  const std::uint64_t chunk = (n + blocks - 1) / blocks;
  std::vector<std::thread> pool;
  pool.reserve(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = b * chunk;
    const std::uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace turan_forge
