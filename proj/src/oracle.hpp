#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bitseries.hpp"
#include "eta.hpp"

namespace etaq {

using BigInt = boost::multiprecision::cpp_int;

// Exact-integer twin of BitSeries, used only at desk scale to ground-truth
// the GF(2) pipeline. Coefficients are arbitrary precision throughout; the
// oracle's only job is trustworthiness, not speed.
struct IntSeries {
	std::uint64_t trunc = 0;
	std::vector<BigInt> coeffs;

	const BigInt& at(std::uint64_t n) const
	{
		if (n >= trunc) throw Error(errc::out_of_range, "coefficient beyond truncation");
		return coeffs[n];
	}
};

// Exact computations refuse to run past this bound.
inline constexpr std::uint64_t kOracleCap = 5000;

// Partitions of n with no part congruent to 3 mod 6.
IntSeries count_a_no3mod6(std::uint64_t trunc);

// Partitions of n in which every odd part occurs at most twice. The two
// counting definitions are equinumerous coefficientwise (their underlying
// partition sets differ).
IntSeries count_a_oddmult(std::uint64_t trunc);

// Partitions of n with no part divisible by b (the b-regular partitions).
IntSeries count_regular(std::uint64_t b, std::uint64_t trunc);

// Exact integer q-expansion of prod f_t^e. Division is an integer
// recurrence against the unit constant term, so no fractions ever appear.
IntSeries eval_eta_exact(const EtaExpr& e, std::uint64_t trunc);

// Coefficientwise reduction mod 2.
BitSeries parity(const IntSeries& s);

} // namespace etaq
