#include "gf2mul.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ETAQ_HAVE_CLMUL_PATH 1
#endif

namespace etaq::gf2 {

namespace {

// Karatsuba recursion bottoms out at 64 words = 4096 bits.
constexpr std::size_t kBaseWords = 64;

std::atomic<bool> g_force_portable{false};

inline void xor_n(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
	for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

// Shift an n-word polynomial left by 4 bits, in place.
inline void shl4(std::uint64_t* c, std::size_t n)
{
	for (std::size_t i = n; i-- > 1;) c[i] = (c[i] << 4) | (c[i - 1] >> 60);
	c[0] <<= 4;
}

// Portable schoolbook: left-to-right comb with 4-bit windows. Requires
// nb <= kBaseWords so the window table fits on the stack; c[0 .. na+nb)
// must be exclusively owned and zero on entry (the accumulator itself is
// shifted between rounds).
void base_portable(std::uint64_t* c, const std::uint64_t* a, std::size_t na,
                   const std::uint64_t* b, std::size_t nb)
{
	std::uint64_t tab[16][kBaseWords + 1];

	const std::size_t tn = nb + 1;
	std::memset(tab[0], 0, tn * sizeof(std::uint64_t));
	std::memcpy(tab[1], b, nb * sizeof(std::uint64_t));
	tab[1][nb] = 0;
	for (unsigned u : {2u, 4u, 8u}) {
		const std::uint64_t* p = tab[u / 2];
		std::uint64_t* q = tab[u];
		q[0] = p[0] << 1;
		for (std::size_t i = 1; i < tn; ++i) q[i] = (p[i] << 1) | (p[i - 1] >> 63);
	}
	for (unsigned u = 3; u < 16; ++u) {
		if ((u & (u - 1)) == 0) continue;
		const std::uint64_t* lo = tab[u & (~u + 1)];
		const std::uint64_t* hi = tab[u & (u - 1)];
		for (std::size_t i = 0; i < tn; ++i) tab[u][i] = lo[i] ^ hi[i];
	}

	for (int k = 15; k >= 0; --k) {
		for (std::size_t i = 0; i < na; ++i) {
			const unsigned u = static_cast<unsigned>(a[i] >> (4 * k)) & 0xF;
			if (u) xor_n(c + i, tab[u], tn);
		}
		if (k) shl4(c, na + nb);
	}
}

#ifdef ETAQ_HAVE_CLMUL_PATH
__attribute__((target("pclmul,sse4.1")))
void base_clmul(std::uint64_t* c, const std::uint64_t* a, std::size_t na,
                const std::uint64_t* b, std::size_t nb)
{
	for (std::size_t i = 0; i < na; ++i) {
		const __m128i ai = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
		for (std::size_t j = 0; j < nb; ++j) {
			const __m128i bj = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
			const __m128i p = _mm_clmulepi64_si128(ai, bj, 0x00);
			c[i + j] ^= static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
			c[i + j + 1] ^= static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
		}
	}
}

bool cpu_has_clmul()
{
	return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
}
#else
bool cpu_has_clmul() { return false; }
#endif

const bool g_cpu_clmul = cpu_has_clmul();

inline void base_mul(std::uint64_t* c, const std::uint64_t* a, std::size_t na,
                     const std::uint64_t* b, std::size_t nb)
{
#ifdef ETAQ_HAVE_CLMUL_PATH
	if (g_cpu_clmul && !g_force_portable.load(std::memory_order_relaxed)) {
		base_clmul(c, a, na, b, nb);
		return;
	}
#endif
	base_portable(c, a, na, b, nb);
}

// dst[0 .. na+nb) zero on entry and exclusively owned.
void mul_rec(std::uint64_t* c, const std::uint64_t* a, std::size_t na,
             const std::uint64_t* b, std::size_t nb)
{
	if (na == 0 || nb == 0) return;
	if (na < nb) {
		std::swap(a, b);
		std::swap(na, nb);
	}

	if (nb <= kBaseWords && na <= 2 * kBaseWords) {
		base_mul(c, a, na, b, nb);
		return;
	}

	if (na > nb + nb / 2) {
		// Long-by-short: walk a in nb-word slices.
		std::vector<std::uint64_t> tmp(2 * nb);
		for (std::size_t off = 0; off < na; off += nb) {
			const std::size_t len = std::min(nb, na - off);
			std::fill(tmp.begin(), tmp.begin() + (len + nb), 0);
			mul_rec(tmp.data(), a + off, len, b, nb);
			xor_n(c + off, tmp.data(), len + nb);
		}
		return;
	}

	// Balanced Karatsuba. Additions are XOR, so there are no carries to
	// propagate and z0 / z2 can be written straight into c.
	const std::size_t h = (na + 1) / 2;
	const std::size_t na1 = na - h;
	const std::size_t nb1 = nb - h; // nonempty: nb >= 2*na/3 > h here

	mul_rec(c, a, h, b, h);
	mul_rec(c + 2 * h, a + h, na1, b + h, nb1);

	std::vector<std::uint64_t> sa(h), sb(h), zm(2 * h, 0);
	for (std::size_t i = 0; i < h; ++i) sa[i] = a[i] ^ (i < na1 ? a[h + i] : 0);
	for (std::size_t i = 0; i < h; ++i) sb[i] = b[i] ^ (i < nb1 ? b[h + i] : 0);
	mul_rec(zm.data(), sa.data(), h, sb.data(), h);

	// middle term = zm ^ z0 ^ z2, placed at offset h
	xor_n(zm.data(), c, 2 * h);
	xor_n(zm.data(), c + 2 * h, na + nb - 2 * h);
	const std::size_t lim = std::min(2 * h, na + nb - h);
	xor_n(c + h, zm.data(), lim); // words past lim cancel identically
}

} // namespace

void mul_words(std::uint64_t* dst, const std::uint64_t* a, std::size_t na,
               const std::uint64_t* b, std::size_t nb)
{
	mul_rec(dst, a, na, b, nb);
}

void force_portable(bool on) noexcept { g_force_portable.store(on); }

bool clmul_active() noexcept
{
	return g_cpu_clmul && !g_force_portable.load();
}

} // namespace etaq::gf2
