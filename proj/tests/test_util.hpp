#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bitseries.hpp"

namespace etaq::test {

inline BitSeries random_series(std::mt19937_64& rng, std::uint64_t trunc)
{
	BitSeries s(trunc);
	for (auto& w : s.words()) w = rng();
	s.mask_tail();
	return s;
}

inline BitSeries random_unit(std::mt19937_64& rng, std::uint64_t trunc)
{
	BitSeries s = random_series(rng, trunc);
	s.set_coeff(0, true);
	return s;
}

// Parity of the number of partitions of n into parts from the given list
// (parts may repeat in the list to model colored parts), multiplicities
// unbounded. Plain DP, independent of the series arithmetic under test.
inline std::vector<unsigned> partition_parity(const std::vector<std::uint64_t>& parts,
                                              std::uint64_t n)
{
	std::vector<unsigned> c(n, 0);
	c[0] = 1;
	for (std::uint64_t p : parts)
		for (std::uint64_t k = p; k < n; ++k) c[k] ^= c[k - p];
	return c;
}

} // namespace etaq::test
