#pragma once

#include <cstdint>
#include <functional>

namespace etaq {

// Process-wide worker count used by the multiplication kernel and the
// scanners. 0 resets to the hardware default. All parallel code paths
// must produce bit-identical results for every worker count.
void set_worker_count(unsigned n) noexcept;
unsigned worker_count() noexcept;

// Runs fn(chunk, begin, end) over a fixed partition of [0, n) into
// `chunks` contiguous ranges. The partition depends only on n and
// `chunks`, never on scheduling; callers merge per-chunk results in
// chunk order (or with a commutative merge).
void parallel_chunks(std::uint64_t n, unsigned chunks,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

} // namespace etaq
