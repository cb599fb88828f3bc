#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

using namespace etaq;

TEST_CASE("count_a_no3mod6 small values")
{
	const IntSeries a = count_a_no3mod6(16);
	// frozen from independent enumeration: partitions avoiding parts 3, 9, 15, ...
	const std::vector<long> expect{1, 1, 2, 2, 4, 5, 8, 10, 15, 18, 26, 32, 45, 55, 74, 90};
	for (std::size_t i = 0; i < expect.size(); ++i) CHECK(a.coeffs[i] == expect[i]);
	CHECK(a.at(0) == 1);
	CHECK(a.at(3) == 2); // {2+1, 1+1+1}; 3 itself excluded
	CHECK(a.at(5) == 5); // 7 partitions of 5 minus {3+2, 3+1+1}
}

TEST_CASE("count_a_oddmult small values")
{
	const IntSeries a = count_a_oddmult(16);
	CHECK(a.at(1) == 1);
	CHECK(a.at(4) == 4); // {4, 3+1, 2+2, 2+1+1}
	CHECK(a.at(5) == 5); // {5, 4+1, 3+2, 3+1+1, 2+2+1}
	CHECK(a.at(6) == 8);
}

TEST_CASE("the two definitions are equinumerous to 500")
{
	const IntSeries x = count_a_no3mod6(500);
	const IntSeries y = count_a_oddmult(500);
	for (std::uint64_t i = 0; i < 500; ++i) REQUIRE(x.coeffs[i] == y.coeffs[i]);
	// strictly positive counts throughout
	for (std::uint64_t i = 0; i < 500; ++i) REQUIRE(x.coeffs[i] > 0);
}

TEST_CASE("count_regular")
{
	const IntSeries r = count_regular(6, 32);
	CHECK(r.at(0) == 1);
	CHECK(r.at(1) == 1);
	CHECK(r.at(6) == 10); // 11 partitions of 6 minus {6}
	const std::vector<long> expect{1, 1, 2, 3, 5, 7, 10, 14, 20, 27, 37, 49, 65, 85, 111, 143};
	for (std::size_t i = 0; i < expect.size(); ++i) CHECK(r.coeffs[i] == expect[i]);
	for (const auto& c : r.coeffs) CHECK(c >= 0);

	CHECK_THROWS_AS(count_regular(1, 10), Error);
	CHECK_THROWS_AS(count_regular(0, 10), Error);
}

TEST_CASE("eval_eta_exact")
{
	// f1 by hand: 1 - q - q^2 + q^5 + q^7 - ...
	const IntSeries f1 = eval_eta_exact(EtaExpr::parse("f1"), 8);
	const std::vector<long> expect{1, -1, -1, 0, 0, 1, 0, 1};
	for (std::size_t i = 0; i < 8; ++i) CHECK(f1.coeffs[i] == expect[i]);

	const IntSeries empty = eval_eta_exact(EtaExpr(), 8);
	CHECK(empty.at(0) == 1);
	for (std::uint64_t i = 1; i < 8; ++i) CHECK(empty.coeffs[i] == 0);

	// generating function identity over Z at desk scale
	const IntSeries gen = eval_eta_exact(EtaExpr::parse("f3/(f1*f6)"), 64);
	const IntSeries dp = count_a_no3mod6(64);
	for (std::uint64_t i = 0; i < 64; ++i) REQUIRE(gen.coeffs[i] == dp.coeffs[i]);
}

TEST_CASE("oracle cap and bounds")
{
	CHECK_THROWS_AS(count_a_no3mod6(5001), Error);
	CHECK_THROWS_AS(eval_eta_exact(EtaExpr::parse("f1"), 5001), Error);
	CHECK_THROWS_AS(count_a_no3mod6(0), Error);
	try {
		count_a_no3mod6(5001);
	} catch (const Error& e) {
		CHECK(e.code() == errc::over_cap);
	}
	CHECK_THROWS_AS((void)count_a_no3mod6(4).at(4), Error);
}

TEST_CASE("coefficients outgrow 64 bits but stay exact")
{
	const IntSeries a = count_a_no3mod6(2000);
	CHECK(a.coeffs[1999] > (BigInt(1) << 64));
	// spot-check exactness through the mod-2 path at the same index
	CHECK(parity(a).coeff(1999) == boost::multiprecision::bit_test(a.coeffs[1999], 0));
}

TEST_CASE("mod-2 reduction matches the bit-packed evaluator")
{
	const std::uint64_t n = 512;
	for (const char* text : {"f3/(f1*f6)", "f6/f1", "f2/f3", "f8/f12"}) {
		const EtaExpr e = EtaExpr::parse(text);
		CHECK(parity(eval_eta_exact(e, n)) == eval_eta(e, n));
	}
}

TEST_CASE("parity handles negative coefficients")
{
	const IntSeries f1 = eval_eta_exact(EtaExpr::parse("f1"), 8);
	const BitSeries p = parity(f1);
	CHECK(p.coeff(0));
	CHECK(p.coeff(1)); // coefficient -1
	CHECK_FALSE(p.coeff(3));
}
