#pragma once

#include <cstdint>
#include <thread>

namespace hlat {

inline constexpr const char* kVersion = "0.1.0";

// Default enumeration node budget: enough for every certified computation in
// the test suite while still catching runaway searches.
inline constexpr std::uint64_t kDefaultMaxNodes = 100'000'000;

// Default cap on the eta-polynomial degree scan.
inline constexpr int kDefaultMMax = 8;

// Default cap on rank for full 2^rank class sweeps.
inline constexpr std::size_t kDefaultRankGuard = 20;

inline unsigned default_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Run-wide configuration, echoed into every JSON report.  threads = 0 means
// "all cores", kept symbolic so identical requests give identical reports on
// any machine.
struct RunConfig {
    std::uint64_t max_nodes = kDefaultMaxNodes;
    int m_max = kDefaultMMax;
    std::size_t rank_guard = kDefaultRankGuard;
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

}  // namespace hlat
