#include "oracle.hpp"

namespace etaq {

namespace {

void check_bounds(std::uint64_t trunc)
{
	if (trunc == 0) throw Error(errc::invalid_argument, "truncation must be positive");
	if (trunc > kOracleCap)
		throw Error(errc::over_cap, "exact oracle capped at truncation " +
		                                std::to_string(kOracleCap) + ", got " +
		                                std::to_string(trunc));
}

IntSeries zero_series(std::uint64_t trunc)
{
	IntSeries s;
	s.trunc = trunc;
	s.coeffs.assign(trunc, BigInt(0));
	return s;
}

// c *= 1/(1 - q^m): the geometric-series recurrence, ascending.
void divide_one_minus(std::vector<BigInt>& c, std::uint64_t m)
{
	for (std::uint64_t n = m; n < c.size(); ++n) c[n] += c[n - m];
}

// c *= (1 - q^m), descending.
void multiply_one_minus(std::vector<BigInt>& c, std::uint64_t m)
{
	for (std::uint64_t n = c.size(); n-- > m;) c[n] -= c[n - m];
}

} // namespace

IntSeries count_a_no3mod6(std::uint64_t trunc)
{
	check_bounds(trunc);
	IntSeries s = zero_series(trunc);
	s.coeffs[0] = 1;
	for (std::uint64_t p = 1; p < trunc; ++p) {
		if (p % 6 == 3) continue;
		divide_one_minus(s.coeffs, p); // unbounded multiplicity
	}
	return s;
}

IntSeries count_a_oddmult(std::uint64_t trunc)
{
	check_bounds(trunc);
	IntSeries s = zero_series(trunc);
	s.coeffs[0] = 1;
	for (std::uint64_t p = 1; p < trunc; ++p) {
		if (p % 2 == 0) {
			divide_one_minus(s.coeffs, p);
		} else {
			// odd parts capped at two copies: multiply by 1 + q^p + q^{2p}
			for (std::uint64_t n = trunc; n-- > p;) {
				s.coeffs[n] += s.coeffs[n - p];
				if (n >= 2 * p) s.coeffs[n] += s.coeffs[n - 2 * p];
			}
		}
	}
	return s;
}

IntSeries count_regular(std::uint64_t b, std::uint64_t trunc)
{
	if (b < 2) throw Error(errc::invalid_argument, "regularity modulus must be at least 2");
	check_bounds(trunc);
	IntSeries s = zero_series(trunc);
	s.coeffs[0] = 1;
	for (std::uint64_t p = 1; p < trunc; ++p) {
		if (p % b == 0) continue;
		divide_one_minus(s.coeffs, p);
	}
	return s;
}

IntSeries eval_eta_exact(const EtaExpr& e, std::uint64_t trunc)
{
	check_bounds(trunc);
	IntSeries s = zero_series(trunc);
	s.coeffs[0] = 1;
	for (const auto& f : e.factors()) {
		const std::uint64_t reps =
		    f.e > 0 ? static_cast<std::uint64_t>(f.e) : ~static_cast<std::uint64_t>(f.e) + 1;
		for (std::uint64_t r = 0; r < reps; ++r) {
			for (std::uint64_t i = 1; f.t * i < trunc; ++i) {
				if (f.e > 0)
					multiply_one_minus(s.coeffs, f.t * i);
				else
					divide_one_minus(s.coeffs, f.t * i);
			}
		}
	}
	return s;
}

BitSeries parity(const IntSeries& s)
{
	BitSeries r(s.trunc);
	for (std::uint64_t n = 0; n < s.trunc; ++n)
		if (boost::multiprecision::bit_test(s.coeffs[n] < 0 ? -s.coeffs[n] : s.coeffs[n], 0))
			r.set_coeff(n, true);
	return r;
}

} // namespace etaq
