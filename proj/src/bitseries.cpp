#include "bitseries.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "gf2mul.hpp"
#include "threads.hpp"

namespace etaq {

namespace {

void require_positive_trunc(std::uint64_t trunc)
{
	if (trunc == 0)
		throw Error(errc::invalid_argument, "truncation must be positive");
}

void require_equal_trunc(const BitSeries& a, const BitSeries& b)
{
	if (a.trunc() != b.trunc())
		throw Error(errc::trunc_mismatch,
		            "truncation mismatch: " + std::to_string(a.trunc()) + " vs " +
		                std::to_string(b.trunc()));
}

// Spread the 32 bits of x to the even bit positions of a 64-bit word.
constexpr std::uint16_t spread_byte(std::uint8_t x)
{
	std::uint16_t r = 0;
	for (int i = 0; i < 8; ++i)
		if (x & (1u << i)) r |= static_cast<std::uint16_t>(1u << (2 * i));
	return r;
}

struct SpreadTable {
	std::array<std::uint16_t, 256> t{};
	constexpr SpreadTable()
	{
		for (unsigned i = 0; i < 256; ++i) t[i] = spread_byte(static_cast<std::uint8_t>(i));
	}
};
constexpr SpreadTable kSpread;

inline std::uint64_t spread32(std::uint32_t x)
{
	return static_cast<std::uint64_t>(kSpread.t[x & 0xFF]) |
	       static_cast<std::uint64_t>(kSpread.t[(x >> 8) & 0xFF]) << 16 |
	       static_cast<std::uint64_t>(kSpread.t[(x >> 16) & 0xFF]) << 32 |
	       static_cast<std::uint64_t>(kSpread.t[(x >> 24) & 0xFF]) << 48;
}

// Parallelize a product once the operands are at least this many words.
constexpr std::size_t kParallelWords = 1 << 12;

// Full product of the low `na` x `nb` words, keeping out_words words.
// Input words beyond out_words cannot influence the kept range and are
// dropped up front.
std::vector<std::uint64_t> mul_words_cap(const std::uint64_t* a, std::size_t na,
                                         const std::uint64_t* b, std::size_t nb,
                                         std::size_t out_words)
{
	na = std::min(na, out_words);
	nb = std::min(nb, out_words);

	std::vector<std::uint64_t> full(na + nb, 0);
	const unsigned workers = worker_count();

	if (workers > 1 && std::min(na, nb) >= kParallelWords) {
		// Slice b into contiguous chunks; each task computes a full
		// product into its own buffer. The XOR merge is exact and
		// order-independent, so the result is bit-identical for every
		// worker count.
		if (na < nb) {
			std::swap(a, b);
			std::swap(na, nb);
		}
		const unsigned chunks = std::min<std::uint64_t>(workers, nb / (kParallelWords / 4));
		std::vector<std::vector<std::uint64_t>> parts(chunks);
		parallel_chunks(nb, chunks, [&](unsigned c, std::uint64_t lo, std::uint64_t hi) {
			if (lo >= hi) return;
			std::vector<std::uint64_t> buf(na + (hi - lo), 0);
			gf2::mul_words(buf.data(), a, na, b + lo, hi - lo);
			parts[c] = std::move(buf);
		});
		std::uint64_t lo = 0;
		for (unsigned c = 0; c < chunks; ++c) {
			const std::uint64_t hi = nb * (c + 1) / chunks;
			const std::size_t lim = std::min(parts[c].size(), full.size() - lo);
			for (std::size_t i = 0; i < lim; ++i) full[lo + i] ^= parts[c][i];
			lo = hi;
		}
	} else {
		gf2::mul_words(full.data(), a, na, b, nb);
	}

	full.resize(out_words, 0);
	return full;
}

} // namespace

BitSeries::BitSeries(std::uint64_t trunc) : trunc_(trunc)
{
	require_positive_trunc(trunc);
	words_.assign(word_count(trunc), 0);
}

BitSeries BitSeries::one(std::uint64_t trunc)
{
	BitSeries s(trunc);
	s.words_[0] = 1;
	return s;
}

bool BitSeries::coeff(std::uint64_t n) const
{
	if (n >= trunc_)
		throw Error(errc::out_of_range,
		            "coefficient index " + std::to_string(n) + " is at or beyond truncation " +
		                std::to_string(trunc_));
	return (words_[n / 64] >> (n % 64)) & 1;
}

void BitSeries::set_coeff(std::uint64_t n, bool v)
{
	if (n >= trunc_)
		throw Error(errc::out_of_range,
		            "coefficient index " + std::to_string(n) + " is at or beyond truncation " +
		                std::to_string(trunc_));
	const std::uint64_t bit = std::uint64_t(1) << (n % 64);
	if (v)
		words_[n / 64] |= bit;
	else
		words_[n / 64] &= ~bit;
}

std::uint64_t BitSeries::popcount() const noexcept
{
	std::uint64_t c = 0;
	for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
	return c;
}

std::uint64_t BitSeries::popcount_below(std::uint64_t n) const
{
	if (n > trunc_)
		throw Error(errc::out_of_range, "popcount bound beyond truncation");
	std::uint64_t c = 0;
	const std::uint64_t full = n / 64;
	for (std::uint64_t w = 0; w < full; ++w)
		c += static_cast<std::uint64_t>(__builtin_popcountll(words_[w]));
	const unsigned rem = n % 64;
	if (rem)
		c += static_cast<std::uint64_t>(
		    __builtin_popcountll(words_[full] & ((std::uint64_t(1) << rem) - 1)));
	return c;
}

std::vector<std::uint64_t> BitSeries::support() const
{
	std::vector<std::uint64_t> s;
	s.reserve(popcount());
	for_each_set([&s](std::uint64_t n) { s.push_back(n); });
	return s;
}

std::uint64_t BitSeries::first_difference(const BitSeries& rhs) const
{
	require_equal_trunc(*this, rhs);
	for (std::size_t w = 0; w < words_.size(); ++w) {
		const std::uint64_t x = words_[w] ^ rhs.words_[w];
		if (x) return 64 * w + static_cast<unsigned>(__builtin_ctzll(x));
	}
	return trunc_;
}

bool BitSeries::operator==(const BitSeries& rhs) const noexcept
{
	return trunc_ == rhs.trunc_ && words_ == rhs.words_;
}

void BitSeries::mask_tail() noexcept
{
	const unsigned rem = trunc_ % 64;
	if (rem) words_.back() &= (std::uint64_t(1) << rem) - 1;
}

BitSeries add(const BitSeries& a, const BitSeries& b)
{
	require_equal_trunc(a, b);
	BitSeries r = a;
	for (std::size_t i = 0; i < r.words().size(); ++i) r.words()[i] ^= b.words()[i];
	return r;
}

BitSeries mul(const BitSeries& a, const BitSeries& b)
{
	require_equal_trunc(a, b);
	return detail::mul_cap(a, b, a.trunc());
}

BitSeries square(const BitSeries& a)
{
	return detail::square_to(a, a.trunc());
}

BitSeries inv(const BitSeries& a)
{
	if (!a.coeff(0))
		throw Error(errc::not_invertible, "constant term is 0: series has no inverse");

	const std::uint64_t n = a.trunc();
	BitSeries x = BitSeries::one(1);
	std::uint64_t m = 1;
	while (m < n) {
		const std::uint64_t m2 = std::min(2 * m, n);
		// Newton step in characteristic 2: x <- a * x^2, doubling precision.
		BitSeries xs = detail::square_to(x, m2);
		x = detail::mul_cap(truncate(a, m2), xs, m2);
		m = m2;
	}
	return x;
}

BitSeries pow(const BitSeries& a, std::int64_t e)
{
	if (e == 0) return BitSeries::one(a.trunc());

	BitSeries base = (e < 0) ? inv(a) : a;
	std::uint64_t k = (e < 0) ? ~static_cast<std::uint64_t>(e) + 1 : static_cast<std::uint64_t>(e);

	// Squaring is the cheap exponent-doubling map, so walk the bits of k
	// with it and reserve full multiplications for the set bits.
	while ((k & 1) == 0) {
		base = square(base);
		k >>= 1;
	}
	BitSeries acc = base;
	k >>= 1;
	while (k) {
		base = square(base);
		if (k & 1) acc = mul(acc, base);
		k >>= 1;
	}
	return acc;
}

BitSeries subst(const BitSeries& a, std::uint64_t t)
{
	if (t == 0)
		throw Error(errc::invalid_argument, "substitution exponent must be positive");
	if (t == 1) return a;

	const std::uint64_t n = a.trunc();
	BitSeries r(n);
	a.for_each_set([&](std::uint64_t i) {
		if (i <= (n - 1) / t) r.words()[(t * i) / 64] |= std::uint64_t(1) << ((t * i) % 64);
	});
	return r;
}

BitSeries truncate(const BitSeries& a, std::uint64_t n)
{
	require_positive_trunc(n);
	if (n > a.trunc())
		throw Error(errc::invalid_argument, "cannot truncate beyond the known precision");
	BitSeries r(n);
	std::copy_n(a.words().begin(), r.words().size(), r.words().begin());
	r.mask_tail();
	return r;
}

BitSeries shift_up(const BitSeries& a, std::uint64_t k)
{
	const std::uint64_t n = a.trunc();
	BitSeries r(n);
	if (k >= n) return r;

	const std::size_t wk = k / 64;
	const unsigned bk = k % 64;
	const auto& in = a.words();
	auto& out = r.words();
	if (bk == 0) {
		for (std::size_t i = out.size(); i-- > wk;) out[i] = in[i - wk];
	} else {
		for (std::size_t i = out.size(); i-- > wk;) {
			out[i] = in[i - wk] << bk;
			if (i > wk) out[i] |= in[i - wk - 1] >> (64 - bk);
		}
	}
	r.mask_tail();
	return r;
}

namespace detail {

BitSeries mul_cap(const BitSeries& a, const BitSeries& b, std::uint64_t out_trunc)
{
	require_positive_trunc(out_trunc);
	BitSeries r(out_trunc);
	r.words() = mul_words_cap(a.words().data(), a.words().size(), b.words().data(),
	                          b.words().size(), BitSeries::word_count(out_trunc));
	r.mask_tail();
	return r;
}

BitSeries square_to(const BitSeries& a, std::uint64_t out_trunc)
{
	require_positive_trunc(out_trunc);
	BitSeries r(out_trunc);
	const auto& in = a.words();
	auto& out = r.words();
	for (std::size_t o = 0; o < out.size(); ++o) {
		const std::size_t w = o / 2;
		if (w >= in.size()) break;
		const std::uint32_t half = (o % 2 == 0) ? static_cast<std::uint32_t>(in[w])
		                                        : static_cast<std::uint32_t>(in[w] >> 32);
		out[o] = spread32(half);
	}
	r.mask_tail();
	return r;
}

void xor_shift_bounded(BitSeries& r, std::uint64_t m, std::uint64_t limit)
{
	const std::uint64_t n = std::min(limit, r.trunc());
	if (m == 0) throw Error(errc::invalid_argument, "shift must be positive");
	if (m >= n) return;

	auto& w = r.words();
	const std::size_t wm = m / 64;
	const unsigned bm = m % 64;
	const std::size_t top = (n + 63) / 64;
	// Descending order: every source word is read before it is rewritten.
	if (bm == 0) {
		for (std::size_t i = top; i-- > wm;) w[i] ^= w[i - wm];
	} else {
		for (std::size_t i = top; i-- > wm;) {
			std::uint64_t v = w[i - wm] << bm;
			if (i > wm) v |= w[i - wm - 1] >> (64 - bm);
			w[i] ^= v;
		}
	}
	r.mask_tail();
}

void xor_shift_inplace(BitSeries& r, std::uint64_t m)
{
	xor_shift_bounded(r, m, r.trunc());
}

void xor_into(BitSeries& dst, const BitSeries& src, std::uint64_t k)
{
	const std::uint64_t n = dst.trunc();
	if (k >= n) return;

	const std::size_t wk = k / 64;
	const unsigned bk = k % 64;
	const auto& in = src.words();
	auto& out = dst.words();
	const std::size_t lim = std::min(out.size(), wk + in.size() + 1);
	if (bk == 0) {
		for (std::size_t i = wk; i < lim && i - wk < in.size(); ++i) out[i] ^= in[i - wk];
	} else {
		for (std::size_t i = wk; i < lim; ++i) {
			std::uint64_t v = 0;
			if (i - wk < in.size()) v = in[i - wk] << bk;
			if (i > wk && i - wk - 1 < in.size()) v |= in[i - wk - 1] >> (64 - bk);
			out[i] ^= v;
		}
	}
	dst.mask_tail();
}

void force_portable_mul(bool on) noexcept { gf2::force_portable(on); }

bool using_clmul() noexcept { return gf2::clmul_active(); }

} // namespace detail

} // namespace etaq
