#include "etaq.h"

#include <cctype>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "error.hpp"
#include "identities.hpp"
#include "oracle.hpp"
#include "report_json.hpp"
#include "scan.hpp"
#include "threads.hpp"
#include "version.hpp"

using namespace etaq;

struct etaq_expr {
	EtaExpr expr;
	std::string canonical;
};

struct etaq_series {
	BitSeries series;
};

struct etaq_exact {
	IntSeries series;
	std::string coeff_buf;
};

struct etaq_report {
	int passed; // 1 / 0 / -1 descriptive
	std::string json;
};

namespace {

thread_local std::string t_last_error;
thread_local std::size_t t_last_offset = static_cast<std::size_t>(-1);

etaq_status map_errc(errc c)
{
	switch (c) {
	case errc::ok: return ETAQ_OK;
	case errc::invalid_argument: return ETAQ_EINVAL;
	case errc::trunc_mismatch: return ETAQ_ETRUNC;
	case errc::out_of_range: return ETAQ_ERANGE;
	case errc::not_invertible: return ETAQ_ENOTINV;
	case errc::parse_error: return ETAQ_EPARSE;
	case errc::over_cap: return ETAQ_ECAP;
	case errc::unknown_tag: return ETAQ_ETAG;
	case errc::empty_class: return ETAQ_EEMPTY;
	case errc::even_class: return ETAQ_EEVEN;
	case errc::internal: return ETAQ_EINTERNAL;
	}
	return ETAQ_EINTERNAL;
}

etaq_status fail(etaq_status s, const char* msg)
{
	t_last_error = msg;
	t_last_offset = static_cast<std::size_t>(-1);
	return s;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
etaq_status guarded(Fn&& fn)
{
	try {
		fn();
		return ETAQ_OK;
	} catch (const Error& e) {
		t_last_error = e.what();
		t_last_offset = e.offset();
		return map_errc(e.code());
	} catch (const std::bad_alloc&) {
		t_last_error = "out of memory";
		t_last_offset = static_cast<std::size_t>(-1);
		return ETAQ_ENOMEM;
	} catch (const std::exception& e) {
		t_last_error = e.what();
		t_last_offset = static_cast<std::size_t>(-1);
		return ETAQ_EINTERNAL;
	}
}

EtaExpr expr_or_default(const char* text)
{
	return text == nullptr ? a_expr() : EtaExpr::parse(text);
}

etaq_report* make_report(int passed, Json payload)
{
	auto* r = new etaq_report;
	r->passed = passed;
	r->json = payload.dump(2);
	return r;
}

} // namespace

extern "C" {

const char* etaq_version(void) { return ETAQ_VERSION_STRING; }

const char* etaq_status_name(etaq_status s)
{
	switch (s) {
	case ETAQ_OK: return "ok";
	case ETAQ_EINVAL: return "invalid_argument";
	case ETAQ_ETRUNC: return "trunc_mismatch";
	case ETAQ_ERANGE: return "out_of_range";
	case ETAQ_ENOTINV: return "not_invertible";
	case ETAQ_EPARSE: return "parse_error";
	case ETAQ_ECAP: return "over_cap";
	case ETAQ_ETAG: return "unknown_tag";
	case ETAQ_EEMPTY: return "empty_class";
	case ETAQ_EEVEN: return "even_class";
	case ETAQ_ENOMEM: return "out_of_memory";
	case ETAQ_EINTERNAL: return "internal_error";
	}
	return "?";
}

const char* etaq_last_error(void) { return t_last_error.c_str(); }

size_t etaq_last_error_offset(void) { return t_last_offset; }

void etaq_set_threads(unsigned n) { set_worker_count(n); }

unsigned etaq_threads(void) { return worker_count(); }

etaq_status etaq_expr_parse(const char* text, etaq_expr** out)
{
	if (!text || !out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] {
		auto e = std::make_unique<etaq_expr>();
		e->expr = EtaExpr::parse(text);
		e->canonical = e->expr.str();
		*out = e.release();
	});
}

const char* etaq_expr_str(const etaq_expr* e) { return e ? e->canonical.c_str() : nullptr; }

void etaq_expr_free(etaq_expr* e) { delete e; }

etaq_status etaq_eval(const etaq_expr* e, uint64_t trunc, etaq_series** out)
{
	if (!e || !out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] { *out = new etaq_series{eval_eta(e->expr, trunc)}; });
}

uint64_t etaq_series_trunc(const etaq_series* s) { return s ? s->series.trunc() : 0; }

etaq_status etaq_series_coeff(const etaq_series* s, uint64_t n, int* bit)
{
	if (!s || !bit) return fail(ETAQ_EINVAL, "null argument");
	return guarded([&] { *bit = s->series.coeff(n) ? 1 : 0; });
}

etaq_status etaq_series_popcount(const etaq_series* s, uint64_t* count)
{
	if (!s || !count) return fail(ETAQ_EINVAL, "null argument");
	*count = s->series.popcount();
	return ETAQ_OK;
}

void etaq_series_free(etaq_series* s) { delete s; }

etaq_status etaq_eval_exact(const etaq_expr* e, uint64_t trunc, etaq_exact** out)
{
	if (!e || !out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] { *out = new etaq_exact{eval_eta_exact(e->expr, trunc), {}}; });
}

uint64_t etaq_exact_trunc(const etaq_exact* s) { return s ? s->series.trunc : 0; }

etaq_status etaq_exact_coeff(etaq_exact* s, uint64_t n, const char** decimal)
{
	if (!s || !decimal) return fail(ETAQ_EINVAL, "null argument");
	return guarded([&] {
		s->coeff_buf = s->series.at(n).str();
		*decimal = s->coeff_buf.c_str();
	});
}

void etaq_exact_free(etaq_exact* s) { delete s; }

etaq_status etaq_verify(const char* tag, uint64_t trunc, etaq_report** out)
{
	if (!tag || !out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] {
		const std::string name(tag);
		std::string norm;
		for (char c : name) norm += c == '-' ? '_' : static_cast<char>(std::tolower(c));

		if (norm == "theorem") {
			const TheoremScan r = verify_theorem(trunc);
			*out = make_report(r.passed ? 1 : 0, to_json(r));
			return;
		}
		if (norm.rfind("proof", 0) == 0 || norm == "first" || norm == "second" ||
		    norm == "third") {
			const Proof p = parse_proof_tag(norm);
			const auto links = derivation_chain(p, trunc);
			bool passed = true;
			for (const auto& l : links) passed = passed && l.passed;
			*out = make_report(passed ? 1 : 0, chain_json(proof_name(p), trunc, links));
			return;
		}
		const VerifyReport r = verify(parse_identity_tag(norm), trunc);
		*out = make_report(r.passed ? 1 : 0, to_json(r));
	});
}

etaq_status etaq_verify_theorem(const char* expr, uint64_t trunc, etaq_report** out)
{
	if (!out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] {
		const TheoremScan r = verify_theorem(expr_or_default(expr), trunc);
		*out = make_report(r.passed ? 1 : 0, to_json(r));
	});
}

const char* etaq_verify_tags(void)
{
	static const std::string tags = [] {
		std::string s;
		for (const auto& t : identity_tag_list()) {
			if (!s.empty()) s += ", ";
			s += t;
		}
		s += ", theorem, proof_first, proof_second, proof_third";
		return s;
	}();
	return tags.c_str();
}

etaq_status etaq_scan_density(const char* expr, uint64_t trunc, uint64_t modulus,
                              etaq_report** out)
{
	if (!out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] {
		const DensityReport r = density(expr_or_default(expr), trunc, modulus);
		*out = make_report(-1, to_json(r));
	});
}

etaq_status etaq_scan_ap(const char* expr, uint64_t trunc, uint64_t max_modulus,
                         etaq_report** out)
{
	if (!out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] {
		const APReport r = ap_scan(expr_or_default(expr), trunc, max_modulus);
		*out = make_report(-1, to_json(r));
	});
}

etaq_status etaq_scan_equi(const char* expr, uint64_t modulus, uint64_t residue, uint64_t trunc,
                           etaq_report** out)
{
	if (!out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] {
		const EquiReport r = equidistribution(expr_or_default(expr), modulus, residue, trunc);
		*out = make_report(-1, to_json(r));
	});
}

etaq_status etaq_scan_link(uint64_t trunc, etaq_report** out)
{
	if (!out) return fail(ETAQ_EINVAL, "null argument");
	*out = nullptr;
	return guarded([&] {
		const LinkReport r = check_remark1_link(trunc);
		*out = make_report(r.passed ? 1 : 0, to_json(r));
	});
}

int etaq_report_passed(const etaq_report* r) { return r ? r->passed : 0; }

const char* etaq_report_json(const etaq_report* r) { return r ? r->json.c_str() : nullptr; }

void etaq_report_free(etaq_report* r) { delete r; }

} // extern "C"
