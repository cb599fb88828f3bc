#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "etaq.h"

using Json = nlohmann::json;

namespace {

struct Report {
	etaq_report* r = nullptr;
	~Report() { etaq_report_free(r); }
	Json json() const { return Json::parse(etaq_report_json(r)); }
};

struct Expr {
	etaq_expr* e = nullptr;
	~Expr() { etaq_expr_free(e); }
};

} // namespace

TEST_CASE("version and status names")
{
	CHECK(std::strcmp(etaq_version(), "0.1.0") == 0);
	CHECK(std::string(etaq_status_name(ETAQ_OK)) == "ok");
	CHECK(std::string(etaq_status_name(ETAQ_EPARSE)) == "parse_error");
}

TEST_CASE("expression parsing")
{
	Expr e;
	REQUIRE(etaq_expr_parse("f3/(f1*f6)", &e.e) == ETAQ_OK);
	CHECK(std::string(etaq_expr_str(e.e)) == "f1^-1*f3*f6^-1");

	etaq_expr* bad = nullptr;
	CHECK(etaq_expr_parse("f0", &bad) == ETAQ_EPARSE);
	CHECK(bad == nullptr);
	CHECK(etaq_last_error_offset() == 1);
	CHECK(std::string(etaq_last_error()).find("positive") != std::string::npos);

	CHECK(etaq_expr_parse(nullptr, &bad) == ETAQ_EINVAL);
}

TEST_CASE("series evaluation and coefficient access")
{
	Expr e;
	REQUIRE(etaq_expr_parse("f3/(f1*f6)", &e.e) == ETAQ_OK);

	etaq_series* s = nullptr;
	REQUIRE(etaq_eval(e.e, 16, &s) == ETAQ_OK);
	CHECK(etaq_series_trunc(s) == 16);

	const int expect[16] = {1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0};
	for (uint64_t n = 0; n < 16; ++n) {
		int bit = -1;
		REQUIRE(etaq_series_coeff(s, n, &bit) == ETAQ_OK);
		CHECK(bit == expect[n]);
	}

	int bit = -1;
	CHECK(etaq_series_coeff(s, 16, &bit) == ETAQ_ERANGE);

	uint64_t pop = 0;
	CHECK(etaq_series_popcount(s, &pop) == ETAQ_OK);
	CHECK(pop == 6); // odd a(n) at n = 0, 1, 5, 8, 12, 13
	etaq_series_free(s);

	etaq_series* zero_trunc = nullptr;
	CHECK(etaq_eval(e.e, 0, &zero_trunc) == ETAQ_EINVAL);
}

TEST_CASE("exact evaluation")
{
	Expr e;
	REQUIRE(etaq_expr_parse("f3/(f1*f6)", &e.e) == ETAQ_OK);

	etaq_exact* s = nullptr;
	REQUIRE(etaq_eval_exact(e.e, 16, &s) == ETAQ_OK);
	CHECK(etaq_exact_trunc(s) == 16);
	const char* expect[9] = {"1", "1", "2", "2", "4", "5", "8", "10", "15"};
	for (uint64_t n = 0; n < 9; ++n) {
		const char* dec = nullptr;
		REQUIRE(etaq_exact_coeff(s, n, &dec) == ETAQ_OK);
		CHECK(std::string(dec) == expect[n]);
	}
	const char* dec = nullptr;
	CHECK(etaq_exact_coeff(s, 16, &dec) == ETAQ_ERANGE);
	etaq_exact_free(s);

	etaq_exact* over = nullptr;
	CHECK(etaq_eval_exact(e.e, 6000, &over) == ETAQ_ECAP);
}

TEST_CASE("verify identities, theorem, proofs")
{
	Report r1;
	REQUIRE(etaq_verify("eq44", 2000, &r1.r) == ETAQ_OK);
	CHECK(etaq_report_passed(r1.r) == 1);
	const Json j1 = r1.json();
	CHECK(j1["kind"] == "verify");
	CHECK(j1["name"] == "eq44");
	CHECK(j1["trunc"] == 2000);
	CHECK(j1["passed"] == true);

	Report r2;
	REQUIRE(etaq_verify("theorem", 10000, &r2.r) == ETAQ_OK);
	CHECK(etaq_report_passed(r2.r) == 1);
	CHECK(r2.json()["kind"] == "theorem");

	Report r3;
	REQUIRE(etaq_verify("proof-second", 2000, &r3.r) == ETAQ_OK);
	CHECK(etaq_report_passed(r3.r) == 1);
	const Json j3 = r3.json();
	CHECK(j3["kind"] == "proof");
	CHECK(j3["name"] == "proof_second");
	CHECK(j3["links"].size() >= 5);

	etaq_report* bad = nullptr;
	CHECK(etaq_verify("no_such_identity", 100, &bad) == ETAQ_ETAG);
	CHECK(std::string(etaq_verify_tags()).find("eq44") != std::string::npos);

	// theorem scan on an explicit stream that violates it
	Report r4;
	REQUIRE(etaq_verify_theorem("f6/f1", 1000, &r4.r) == ETAQ_OK);
	CHECK(etaq_report_passed(r4.r) == 0);
	CHECK(r4.json()["first_violation"] == 3);

	Report r5;
	REQUIRE(etaq_verify("frobenius_6", 2000, &r5.r) == ETAQ_OK);
	CHECK(etaq_report_passed(r5.r) == 1);
}

TEST_CASE("scanners through the C API")
{
	Report d;
	REQUIRE(etaq_scan_density(nullptr, 1000, 4, &d.r) == ETAQ_OK);
	CHECK(etaq_report_passed(d.r) == -1); // descriptive
	const Json dj = d.json();
	CHECK(dj["classes"][2]["odd_count"] == 0);
	CHECK(dj["classes"][3]["odd_count"] == 0);
	CHECK(dj["classes"][0]["odd_count"] == 137);
	CHECK(dj["expr"] == "f1^-1*f3*f6^-1");

	Report ap;
	REQUIRE(etaq_scan_ap(nullptr, 4096, 8, &ap.r) == ETAQ_OK);
	const Json apj = ap.json();
	CHECK(apj["even_classes"] == 6);
	for (const auto& w : apj["witnesses"])
		if (w["status"] == "even_up_to_n") CHECK(w["subsumed"] == true);

	Report eq;
	REQUIRE(etaq_scan_equi(nullptr, 4, 1, 1000, &eq.r) == ETAQ_OK);
	CHECK(eq.json()["odd_count"] == 121);
	etaq_report* bad = nullptr;
	CHECK(etaq_scan_equi(nullptr, 4, 2, 1000, &bad) == ETAQ_EEVEN);
	CHECK(etaq_scan_equi(nullptr, 2000, 1500, 1000, &bad) == ETAQ_EEMPTY);

	Report lk;
	REQUIRE(etaq_scan_link(10000, &lk.r) == ETAQ_OK);
	CHECK(etaq_report_passed(lk.r) == 1);
	CHECK(lk.json()["passed"] == true);

	// a custom stream through a scanner
	Report d2;
	REQUIRE(etaq_scan_density("f6/f1", 1000, 2, &d2.r) == ETAQ_OK);
	CHECK(d2.json()["expr"] == "f1^-1*f6");

	CHECK(etaq_scan_density("f0", 1000, 2, &bad) == ETAQ_EPARSE);
	CHECK(etaq_scan_ap(nullptr, 100, 64, &bad) == ETAQ_EINVAL);
}

TEST_CASE("thread configuration")
{
	etaq_set_threads(3);
	CHECK(etaq_threads() == 3);
	etaq_set_threads(0);
	CHECK(etaq_threads() >= 1);
}
