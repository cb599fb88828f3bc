#include "threads.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace etaq {

namespace {
std::atomic<unsigned> g_workers{0}; // 0 = auto

unsigned hardware_workers()
{
	unsigned n = std::thread::hardware_concurrency();
	return n == 0 ? 1 : n;
}
} // namespace

void set_worker_count(unsigned n) noexcept { g_workers.store(n); }

unsigned worker_count() noexcept
{
	unsigned n = g_workers.load();
	return n == 0 ? hardware_workers() : n;
}

void parallel_chunks(std::uint64_t n, unsigned chunks,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn)
{
	if (chunks == 0) chunks = 1;
	if (chunks > n) chunks = n == 0 ? 1 : static_cast<unsigned>(n);

	if (chunks == 1) {
		fn(0, 0, n);
		return;
	}

	std::vector<std::thread> pool;
	pool.reserve(chunks - 1);
	for (unsigned c = 0; c < chunks; ++c) {
		const std::uint64_t lo = n * c / chunks;
		const std::uint64_t hi = n * (c + 1) / chunks;
		if (c + 1 == chunks) {
			fn(c, lo, hi); // run the last chunk on the calling thread
		} else {
			pool.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
		}
	}
	for (auto& t : pool) t.join();
}

} // namespace etaq
