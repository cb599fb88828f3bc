#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eta.hpp"
#include "test_util.hpp"

using namespace etaq;
using etaq::test::partition_parity;

namespace {

std::size_t offset_of(const std::string& text)
{
	try {
		EtaExpr::parse(text);
	} catch (const Error& e) {
		CHECK(e.code() == errc::parse_error);
		return e.offset();
	}
	FAIL("expected a parse error for '", text, "'");
	return Error::npos;
}

} // namespace

TEST_CASE("euler small supports")
{
	CHECK(euler(1, 20).support() == std::vector<std::uint64_t>{0, 1, 2, 5, 7, 12, 15});

	const BitSeries f6 = euler(6, 7);
	CHECK(f6.support() == std::vector<std::uint64_t>{0, 6}); // only i=1 fits

	CHECK(pow(euler(1, 40), 3).support() ==
	      std::vector<std::uint64_t>{0, 1, 3, 6, 10, 15, 21, 28, 36});

	CHECK_THROWS_AS(euler(0, 10), Error);
	CHECK_THROWS_AS(euler(1, 0), Error);
	CHECK(euler(100, 50) == BitSeries::one(50)); // no factor below the truncation
}

TEST_CASE("euler equals the substitution route")
{
	const std::uint64_t n = 2000;
	const BitSeries f1 = euler(1, n);
	for (std::uint64_t t = 1; t <= 24; ++t) CHECK(euler(t, n) == subst(f1, t));
}

TEST_CASE("pentagonal and triangular supports at 1e5")
{
	const std::uint64_t n = 100000;
	CHECK(euler(1, n) == sparse(SparseKind::pentagonal, n).to_series());
	CHECK(pow(euler(1, n), 3) == sparse(SparseKind::triangular, n).to_series());
}

TEST_CASE("sparse supports")
{
	CHECK(sparse(SparseKind::n3nm2, 25).exponents ==
	      std::vector<std::uint64_t>{0, 1, 5, 8, 16, 21});
	CHECK(sparse(SparseKind::shifted_square, 30).exponents ==
	      std::vector<std::uint64_t>{1, 4, 16, 25});
	CHECK(sparse(SparseKind::pentagonal, 3).exponents == std::vector<std::uint64_t>{0, 1, 2});
	CHECK(sparse(SparseKind::triangular, 40).exponents ==
	      std::vector<std::uint64_t>{0, 1, 3, 6, 10, 15, 21, 28, 36});

	// strictly increasing, below the bound
	for (auto kind : {SparseKind::pentagonal, SparseKind::triangular, SparseKind::n3nm2,
	                  SparseKind::shifted_square}) {
		const SparseSupport s = sparse(kind, 100000);
		for (std::size_t i = 1; i < s.exponents.size(); ++i)
			REQUIRE(s.exponents[i - 1] < s.exponents[i]);
		REQUIRE(s.exponents.back() < s.bound);
	}
	CHECK_THROWS_AS(sparse(SparseKind::pentagonal, 0), Error);
}

TEST_CASE("residues mod 4 of the sparse supports")
{
	CHECK(sparse(SparseKind::n3nm2, 1000000).residues_mod4() == std::set<unsigned>{0, 1});
	CHECK(sparse(SparseKind::shifted_square, 1000000).residues_mod4() ==
	      std::set<unsigned>{0, 1});
	CHECK(sparse(SparseKind::pentagonal, 8).residues_mod4() ==
	      std::set<unsigned>{0, 1, 2, 3}); // exponents 0,1,2,5,7
}

TEST_CASE("parser accepts the grammar")
{
	const EtaExpr gen = EtaExpr::parse("f3/(f1*f6)");
	CHECK(gen.factors() == std::vector<EtaFactor>{{1, -1}, {3, 1}, {6, -1}});
	CHECK(gen.str() == "f1^-1*f3*f6^-1");

	CHECK(EtaExpr::parse("f1^4").factors() == std::vector<EtaFactor>{{1, 4}});
	CHECK(EtaExpr::parse("f1*f1^-1").empty());
	CHECK(EtaExpr::parse("f1*f1^-1").str() == "1");
	CHECK(EtaExpr::parse("f8/f12").factors() == std::vector<EtaFactor>{{8, 1}, {12, -1}});
	CHECK(EtaExpr::parse(" f3 / ( f1 * f6 ) ") == gen);
	CHECK(EtaExpr::parse("(f1*f2)*f3").factors() ==
	      std::vector<EtaFactor>{{1, 1}, {2, 1}, {3, 1}});
	CHECK(EtaExpr::parse("f2^+3").factors() == std::vector<EtaFactor>{{2, 3}});
	CHECK(EtaExpr::parse("f2^0").empty());
	CHECK(EtaExpr::parse("f1^2*f1^-1").factors() == std::vector<EtaFactor>{{1, 1}});
}

TEST_CASE("parser rejects with byte offsets")
{
	CHECK(offset_of("") == 0);
	CHECK(offset_of("   ") == 0);
	CHECK(offset_of("x") == 0);
	CHECK(offset_of("f0") == 1);       // zero subscript
	CHECK(offset_of("f") == 1);        // missing subscript
	CHECK(offset_of("f3/") == 3);      // missing term after '/'
	CHECK(offset_of("f1^") == 3);      // missing exponent
	CHECK(offset_of("(f1") == 3);      // unbalanced paren
	CHECK(offset_of("f1/f2/f3") == 5); // only one division level
	CHECK(offset_of("f1)") == 2);      // trailing junk
	CHECK(offset_of("f1**f2") == 3);
	CHECK(offset_of("f99999999999999999999") == 1); // subscript overflow
}

TEST_CASE("canonical form round-trips")
{
	std::mt19937_64 rng(11);
	for (int i = 0; i < 50; ++i) {
		std::vector<EtaFactor> fs;
		const int k = 1 + static_cast<int>(rng() % 4);
		for (int j = 0; j < k; ++j)
			fs.push_back({1 + rng() % 30, static_cast<std::int64_t>(rng() % 25) - 12});
		const EtaExpr e = EtaExpr::from_factors(fs);
		if (e.empty()) continue;
		CHECK(EtaExpr::parse(e.str()) == e);
	}
}

TEST_CASE("from_factors normalizes and validates")
{
	CHECK(EtaExpr::from_factors({{3, 1}, {1, -1}, {3, 2}}).factors() ==
	      std::vector<EtaFactor>{{1, -1}, {3, 3}});
	CHECK(EtaExpr::from_factors({{2, 1}, {2, -1}}).empty());
	CHECK_THROWS_AS(EtaExpr::from_factors({{0, 1}}), Error);
}

TEST_CASE("eval_eta")
{
	const std::uint64_t n = 512;
	CHECK(eval_eta(EtaExpr::parse("f6/f3^2"), n) == BitSeries::one(n)); // f6 = f3^2 mod 2
	CHECK(eval_eta(EtaExpr(), n) == BitSeries::one(n));

	// a(n) parity from the DP side: parts not congruent to 3 mod 6
	std::vector<std::uint64_t> parts;
	for (std::uint64_t p = 1; p < 128; ++p)
		if (p % 6 != 3) parts.push_back(p);
	const auto a_parity = partition_parity(parts, 128);
	const BitSeries a = eval_eta(EtaExpr::parse("f3/(f1*f6)"), 128);
	for (std::uint64_t i = 0; i < 128; ++i) CHECK(a.coeff(i) == (a_parity[i] != 0));

	// 6-regular parity
	parts.clear();
	for (std::uint64_t p = 1; p < 128; ++p)
		if (p % 6 != 0) parts.push_back(p);
	const auto reg6 = partition_parity(parts, 128);
	const BitSeries g = eval_eta(EtaExpr::parse("f6/f1"), 128);
	for (std::uint64_t i = 0; i < 128; ++i) CHECK(g.coeff(i) == (reg6[i] != 0));
}

TEST_CASE("eval_eta respects exponent arithmetic")
{
	std::mt19937_64 rng(12);
	const std::uint64_t n = 300;
	for (int i = 0; i < 10; ++i) {
		std::vector<EtaFactor> f1, f2;
		for (int j = 0; j < 2; ++j) {
			f1.push_back({1 + rng() % 6, static_cast<std::int64_t>(rng() % 7) - 3});
			f2.push_back({1 + rng() % 6, static_cast<std::int64_t>(rng() % 7) - 3});
		}
		std::vector<EtaFactor> merged = f1;
		merged.insert(merged.end(), f2.begin(), f2.end());
		const BitSeries lhs = mul(eval_eta(EtaExpr::from_factors(f1), n),
		                          eval_eta(EtaExpr::from_factors(f2), n));
		CHECK(lhs == eval_eta(EtaExpr::from_factors(merged), n));
	}
}
