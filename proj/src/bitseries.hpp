#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace etaq {

// Truncated formal power series over GF(2). The series is known modulo
// q^trunc; bit n of the packed word array is the coefficient of q^n.
// Bits at positions >= trunc do not exist logically and are kept zero in
// the last word. Values are immutable once built and safe to share
// read-only across threads.
class BitSeries {
public:
	explicit BitSeries(std::uint64_t trunc); // the zero series mod q^trunc
	static BitSeries one(std::uint64_t trunc);

	std::uint64_t trunc() const noexcept { return trunc_; }

	// Coefficient of q^n. Reading past the truncation is an error, never
	// a silent zero: indices beyond trunc are unknown, not absent.
	bool coeff(std::uint64_t n) const;
	void set_coeff(std::uint64_t n, bool v);

	std::uint64_t popcount() const noexcept;
	std::uint64_t popcount_below(std::uint64_t n) const; // set bits at indices < n <= trunc
	std::vector<std::uint64_t> support() const;          // ascending positions of set bits

	// Smallest index where the two series disagree, or trunc() if equal.
	std::uint64_t first_difference(const BitSeries& rhs) const;

	bool operator==(const BitSeries& rhs) const noexcept;
	bool operator!=(const BitSeries& rhs) const noexcept { return !(*this == rhs); }

	const std::vector<std::uint64_t>& words() const noexcept { return words_; }
	std::vector<std::uint64_t>& words() noexcept { return words_; }
	void mask_tail() noexcept; // clear bits at positions >= trunc

	static std::uint64_t word_count(std::uint64_t trunc) { return (trunc + 63) / 64; }

	// Calls fn(n) for every set bit, in ascending order.
	template <typename Fn>
	void for_each_set(Fn&& fn) const
	{
		for (std::size_t w = 0; w < words_.size(); ++w) {
			std::uint64_t x = words_[w];
			while (x) {
				fn(64 * w + static_cast<unsigned>(__builtin_ctzll(x)));
				x &= x - 1;
			}
		}
	}

private:
	std::uint64_t trunc_;
	std::vector<std::uint64_t> words_;
};

// Binary operations require equal truncations; mixing precisions silently
// would hide bugs in identity verification, so it is an error instead.
BitSeries add(const BitSeries& a, const BitSeries& b); // coefficientwise XOR
BitSeries mul(const BitSeries& a, const BitSeries& b); // carryless convolution mod q^trunc
BitSeries square(const BitSeries& a);                  // exponent doubling: bit i -> bit 2i
BitSeries inv(const BitSeries& a);                     // Newton doubling; constant term must be 1
BitSeries pow(const BitSeries& a, std::int64_t e);     // negative e goes through inv
BitSeries subst(const BitSeries& a, std::uint64_t t);  // q -> q^t at the same truncation
BitSeries truncate(const BitSeries& a, std::uint64_t n); // n <= a.trunc()
BitSeries shift_up(const BitSeries& a, std::uint64_t k); // multiply by q^k; top bits drop

inline BitSeries operator+(const BitSeries& a, const BitSeries& b) { return add(a, b); }
inline BitSeries operator*(const BitSeries& a, const BitSeries& b) { return mul(a, b); }

namespace detail {

// Product truncated to out_trunc; operands may carry different truncations.
// Used by the Euler product tree and the Newton iteration, where interior
// nodes legitimately live at unequal precisions.
BitSeries mul_cap(const BitSeries& a, const BitSeries& b, std::uint64_t out_trunc);

// Squaring into an explicit output truncation.
BitSeries square_to(const BitSeries& a, std::uint64_t out_trunc);

// r ^= r << m within r's truncation, i.e. multiplication by (1 + q^m).
void xor_shift_inplace(BitSeries& r, std::uint64_t m);

// Same, but touching only bits below limit (callers track how far the
// product can have reached); limit <= r.trunc().
void xor_shift_bounded(BitSeries& r, std::uint64_t m, std::uint64_t limit);

// dst ^= src << k, clipped to dst's truncation. dst and src must be
// distinct objects.
void xor_into(BitSeries& dst, const BitSeries& src, std::uint64_t k);

// Test hook: force the portable multiplication kernel even when the CPU
// has a carryless-multiply instruction. Both kernels must agree bit for bit.
void force_portable_mul(bool on) noexcept;
bool using_clmul() noexcept;

} // namespace detail

} // namespace etaq
