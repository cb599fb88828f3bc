// Command-line front end for libetaq. Talks to the core exclusively
// through the C API in etaq.h; report payloads arrive as canonical JSON
// and are wrapped in a single envelope per run.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or input error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "etaq.h"

using Json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct ReportDeleter {
	void operator()(etaq_report* r) const { etaq_report_free(r); }
};
struct ExprDeleter {
	void operator()(etaq_expr* e) const { etaq_expr_free(e); }
};
struct SeriesDeleter {
	void operator()(etaq_series* s) const { etaq_series_free(s); }
};
struct ExactDeleter {
	void operator()(etaq_exact* s) const { etaq_exact_free(s); }
};

using ReportPtr = std::unique_ptr<etaq_report, ReportDeleter>;
using ExprPtr = std::unique_ptr<etaq_expr, ExprDeleter>;
using SeriesPtr = std::unique_ptr<etaq_series, SeriesDeleter>;
using ExactPtr = std::unique_ptr<etaq_exact, ExactDeleter>;

[[noreturn]] void die_status(etaq_status s)
{
	std::cerr << "etaq: " << etaq_status_name(s) << ": " << etaq_last_error();
	if (s == ETAQ_EPARSE && etaq_last_error_offset() != static_cast<size_t>(-1))
		std::cerr << " (byte offset " << etaq_last_error_offset() << ")";
	if (s == ETAQ_ETAG) std::cerr << "\navailable tags: " << etaq_verify_tags();
	std::cerr << "\n";
	std::exit(kExitUsage);
}

struct Output {
	std::string format = "plain"; // plain | json | csv
	std::string out_path;

	void emit(const std::string& text) const
	{
		if (out_path.empty()) {
			std::cout << text;
			if (!text.empty() && text.back() != '\n') std::cout << '\n';
		} else {
			std::ofstream f(out_path);
			if (!f) {
				std::cerr << "etaq: cannot open " << out_path << "\n";
				std::exit(kExitUsage);
			}
			f << text;
			if (!text.empty() && text.back() != '\n') f << '\n';
		}
	}
};

Json envelope(const std::string& command, Json parameters, Json result, double wall_ms)
{
	Json env;
	env["command"] = command;
	env["parameters"] = std::move(parameters);
	env["result"] = std::move(result);
	env["wall_ms"] = wall_ms;
	env["version"] = etaq_version();
	return env;
}

std::string csv_escape(const Json& v)
{
	if (v.is_string()) return v.get<std::string>();
	return v.dump();
}

std::string result_to_csv(const Json& r)
{
	std::string out;
	const std::string kind = r.value("kind", "");
	auto rows = [&out](const char* header, const Json& arr,
	                   const std::vector<std::string>& cols) {
		out += header;
		out += '\n';
		for (const auto& row : arr) {
			std::string line;
			for (const auto& c : cols) {
				if (!line.empty()) line += ',';
				line += row.contains(c) ? csv_escape(row[c]) : "";
			}
			out += line;
			out += '\n';
		}
	};
	if (kind == "density") {
		rows("residue,class_size,odd_count,odd_fraction", r["classes"],
		     {"residue", "class_size", "odd_count", "odd_fraction"});
	} else if (kind == "ap") {
		rows("modulus,residue,status,witness,subsumed", r["witnesses"],
		     {"modulus", "residue", "status", "witness", "subsumed"});
	} else if (kind == "equidistribution") {
		rows("upto,class_size,odd_count,odd_fraction", r["checkpoints"],
		     {"upto", "class_size", "odd_count", "odd_fraction"});
	} else if (kind == "coeffs") {
		rows("n,value", r["coefficients"], {"n", "value"});
	} else {
		// verify / theorem / proof / link: one summary row
		out += "name,trunc,outcome,first_mismatch\n";
		std::string name = r.contains("name") ? r["name"].get<std::string>()
		                                      : r.value("kind", std::string("?"));
		std::string mismatch;
		if (r.contains("first_mismatch")) mismatch = r["first_mismatch"].dump();
		if (r.contains("first_violation")) mismatch = r["first_violation"].dump();
		out += name + "," + r["trunc"].dump() + "," +
		       (r["passed"].get<bool>() ? "pass" : "fail") + "," + mismatch + "\n";
	}
	return out;
}

std::string result_to_plain(const Json& r)
{
	const std::string kind = r.value("kind", "");
	std::string out;
	if (kind == "coeffs") {
		std::string vals;
		for (const auto& row : r["coefficients"]) {
			if (!vals.empty()) vals += ',';
			vals += csv_escape(row["value"]);
		}
		return vals + "\n";
	}
	if (kind == "verify" || kind == "theorem") {
		out = (r.contains("name") ? r["name"].get<std::string>() : std::string("theorem")) +
		      " @ trunc " + r["trunc"].dump() + ": " +
		      (r["passed"].get<bool>() ? "PASS" : "FAIL");
		if (r.contains("first_mismatch"))
			out += "  first mismatch " + r["first_mismatch"].dump();
		if (r.contains("first_violation"))
			out += "  first violation at n=" + r["first_violation"].dump();
		return out + "\n";
	}
	if (kind == "proof") {
		for (const auto& link : r["links"]) {
			out += std::string(link["passed"].get<bool>() ? "  ok   " : "  FAIL ") +
			       link["name"].get<std::string>();
			if (link.contains("first_mismatch"))
				out += "  at " + link["first_mismatch"]["index"].dump();
			out += '\n';
		}
		out += r["name"].get<std::string>() + " @ trunc " + r["trunc"].dump() + ": " +
		       (r["passed"].get<bool>() ? "PASS" : "FAIL") + "\n";
		return out;
	}
	if (kind == "density") {
		out = "density of odd coefficients, expr " + r["expr"].get<std::string>() +
		      ", trunc " + r["trunc"].dump() + ", modulus " + r["modulus"].dump() + "\n";
		out += "overall: " + r["total_odd"].dump() + " odd (fraction " +
		       r["odd_fraction"].dump() + ")\n";
		for (const auto& c : r["classes"])
			out += "  class " + c["residue"].dump() + ": size " + c["class_size"].dump() +
			       ", odd " + c["odd_count"].dump() + ", fraction " +
			       c["odd_fraction"].dump() + "\n";
		out += "checkpoints (upto: fraction):";
		for (const auto& c : r["checkpoints"])
			out += " " + c["upto"].dump() + ":" + c["odd_fraction"].dump();
		return out + "\n";
	}
	if (kind == "ap") {
		std::uint64_t even = 0, insufficient = 0, odd = 0;
		for (const auto& w : r["witnesses"]) {
			const std::string st = w["status"].get<std::string>();
			if (st == "even_up_to_n") {
				++even;
				out += "  even class (" + w["modulus"].dump() + "," + w["residue"].dump() +
				       ")" + (w["subsumed"].get<bool>() ? " [subsumed]" : " [NEW]") + "\n";
			} else if (st == "insufficient_data") {
				++insufficient;
			} else {
				++odd;
			}
		}
		out = "ap scan, expr " + r["expr"].get<std::string>() + ", trunc " +
		      r["trunc"].dump() + ", moduli 1.." + r["max_modulus"].dump() + "\n" +
		      "classes with odd witness: " + std::to_string(odd) +
		      ", even up to trunc: " + std::to_string(even) +
		      ", insufficient: " + std::to_string(insufficient) + "\n" + out;
		return out;
	}
	if (kind == "equidistribution") {
		out = "class " + r["residue"].dump() + " mod " + r["modulus"].dump() + " below " +
		      r["trunc"].dump() + ": " + r["odd_count"].dump() + "/" +
		      r["class_size"].dump() + " odd (fraction " + r["odd_fraction"].dump() +
		      ", max checkpoint deviation from 1/2: " + r["max_deviation"].dump() + ")\n";
		return out;
	}
	if (kind == "link") {
		out = "residue-class link @ trunc " + r["trunc"].dump() + ": " +
		      (r["passed"].get<bool>() ? "PASS" : "FAIL");
		if (r.contains("first_mismatch")) out += "  first mismatch " + r["first_mismatch"].dump();
		return out + "\n";
	}
	return r.dump(2) + "\n";
}

int finish(const Output& output, const std::string& command, Json parameters, Json result,
           clock_type::time_point t0, int exit_code)
{
	const double wall =
	    std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
	if (output.format == "json") {
		output.emit(envelope(command, std::move(parameters), std::move(result), wall).dump(2));
	} else if (output.format == "csv") {
		output.emit(result_to_csv(result));
	} else {
		output.emit(result_to_plain(result));
	}
	return exit_code;
}

Json report_json(const etaq_report* r) { return Json::parse(etaq_report_json(r)); }

bool parse_range(const std::string& text, std::uint64_t& lo, std::uint64_t& hi)
{
	const auto dots = text.find("..");
	if (dots == std::string::npos) return false;
	try {
		lo = std::stoull(text.substr(0, dots));
		hi = std::stoull(text.substr(dots + 2));
	} catch (...) {
		return false;
	}
	return lo <= hi;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"eta-quotient parity toolkit"};
	app.set_version_flag("--version", etaq_version());

	std::string format = "plain", out_path;
	unsigned threads = 0;
	bool threads_given = false;
	std::optional<std::uint64_t> trunc_opt;
	app.add_option("--format", format, "output format")
	    ->check(CLI::IsMember({"plain", "json", "csv"}))
	    ->capture_default_str();
	app.add_option("--out", out_path, "write the report to a file instead of stdout");
	app.add_option("--threads", threads, "worker count; 0 = auto (env ETAQ_THREADS)")
	    ->each([&](const std::string&) { threads_given = true; });
	app.add_option("--trunc", trunc_opt, "series truncation");
	app.require_subcommand(1);

	// coeffs EXPR [RANGE]
	auto* coeffs = app.add_subcommand("coeffs", "print coefficients of an eta-quotient");
	coeffs->fallthrough();
	std::string coeffs_expr, coeffs_range;
	bool exact = false;
	coeffs->add_option("expr", coeffs_expr, "eta-quotient, e.g. \"f3/(f1*f6)\"")->required();
	coeffs->add_option("range", coeffs_range, "inclusive index range lo..hi (default 0..31)");
	coeffs->add_flag("--exact", exact, "exact integer coefficients (oracle scale)");

	// verify TAG
	auto* verify = app.add_subcommand("verify", "verify an identity, proof chain, or the theorem");
	verify->fallthrough();
	std::string verify_tag, verify_expr;
	verify->add_option("tag", verify_tag, "identity/proof tag, or 'theorem'")->required();
	verify->add_option("--expr", verify_expr, "stream for the theorem scan (theorem only)");

	// scan KIND
	auto* scan = app.add_subcommand("scan", "run a density / ap / equidistribution / link scan");
	scan->fallthrough();
	std::string scan_kind, scan_expr;
	std::uint64_t scan_mod = 4, scan_max_mod = 64, scan_residue = 0;
	bool mod_given = false, residue_given = false;
	scan->add_option("kind", scan_kind, "density | ap | equi | link")
	    ->required()
	    ->check(CLI::IsMember({"density", "ap", "equi", "link"}));
	scan->add_option("--expr", scan_expr, "eta-quotient stream (default f3/(f1*f6))");
	scan->add_option("--mod", scan_mod, "modulus (density, equi)")
	    ->each([&](const std::string&) { mod_given = true; });
	scan->add_option("--max-mod", scan_max_mod, "largest modulus (ap)");
	scan->add_option("--residue", scan_residue, "residue class (equi)")
	    ->each([&](const std::string&) { residue_given = true; });

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
			return app.exit(e);
		app.exit(e);
		return kExitUsage;
	}

	if (!threads_given) {
		if (const char* env = std::getenv("ETAQ_THREADS")) threads = std::strtoul(env, nullptr, 10);
	}
	etaq_set_threads(threads);

	const Output output{format, out_path};
	const auto t0 = clock_type::now();

	if (*coeffs) {
		std::uint64_t lo = 0, hi = 31;
		if (!coeffs_range.empty() && !parse_range(coeffs_range, lo, hi)) {
			std::cerr << "etaq: bad range '" << coeffs_range << "', expected lo..hi\n";
			return kExitUsage;
		}
		const std::uint64_t trunc = trunc_opt.value_or(hi + 1);
		if (hi >= trunc) {
			std::cerr << "etaq: range end " << hi << " is at or beyond trunc " << trunc << "\n";
			return kExitUsage;
		}

		etaq_expr* raw_expr = nullptr;
		etaq_status s = etaq_expr_parse(coeffs_expr.c_str(), &raw_expr);
		if (s != ETAQ_OK) die_status(s);
		ExprPtr expr(raw_expr);

		Json table = Json::array();
		if (exact) {
			etaq_exact* raw = nullptr;
			s = etaq_eval_exact(expr.get(), trunc, &raw);
			if (s != ETAQ_OK) die_status(s);
			ExactPtr series(raw);
			for (std::uint64_t n = lo; n <= hi; ++n) {
				const char* dec = nullptr;
				s = etaq_exact_coeff(series.get(), n, &dec);
				if (s != ETAQ_OK) die_status(s);
				table.push_back(Json{{"n", n}, {"value", std::string(dec)}});
			}
		} else {
			etaq_series* raw = nullptr;
			s = etaq_eval(expr.get(), trunc, &raw);
			if (s != ETAQ_OK) die_status(s);
			SeriesPtr series(raw);
			for (std::uint64_t n = lo; n <= hi; ++n) {
				int bit = 0;
				s = etaq_series_coeff(series.get(), n, &bit);
				if (s != ETAQ_OK) die_status(s);
				table.push_back(Json{{"n", n}, {"value", bit}});
			}
		}
		Json result;
		result["kind"] = "coeffs";
		result["expr"] = etaq_expr_str(expr.get());
		result["exact"] = exact;
		result["trunc"] = trunc;
		result["coefficients"] = std::move(table);
		Json params{{"expr", coeffs_expr}, {"range", Json::array({lo, hi})},
		            {"exact", exact},      {"trunc", trunc}};
		return finish(output, "coeffs", std::move(params), std::move(result), t0, kExitOk);
	}

	if (*verify) {
		const std::uint64_t trunc = trunc_opt.value_or(100000);
		std::string norm = verify_tag;
		for (auto& c : norm) c = c == '-' ? '_' : static_cast<char>(std::tolower(c));

		etaq_report* raw = nullptr;
		etaq_status s;
		if (!verify_expr.empty()) {
			if (norm != "theorem") {
				std::cerr << "etaq: --expr is only valid with 'verify theorem'\n";
				return kExitUsage;
			}
			s = etaq_verify_theorem(verify_expr.c_str(), trunc, &raw);
		} else {
			s = etaq_verify(verify_tag.c_str(), trunc, &raw);
		}
		if (s != ETAQ_OK) die_status(s);
		ReportPtr report(raw);
		const int code = etaq_report_passed(report.get()) == 1 ? kExitOk : kExitVerifyFailed;
		Json params{{"tag", verify_tag}, {"trunc", trunc}};
		if (!verify_expr.empty()) params["expr"] = verify_expr;
		return finish(output, "verify", std::move(params), report_json(report.get()), t0, code);
	}

	if (*scan) {
		const std::uint64_t trunc = trunc_opt.value_or(1000000);
		const char* expr = scan_expr.empty() ? nullptr : scan_expr.c_str();
		etaq_report* raw = nullptr;
		etaq_status s = ETAQ_EINVAL;
		Json params{{"kind", scan_kind}, {"trunc", trunc}};
		if (!scan_expr.empty()) params["expr"] = scan_expr;

		if (scan_kind == "density") {
			params["mod"] = scan_mod;
			s = etaq_scan_density(expr, trunc, scan_mod, &raw);
		} else if (scan_kind == "ap") {
			params["max_mod"] = scan_max_mod;
			s = etaq_scan_ap(expr, trunc, scan_max_mod, &raw);
		} else if (scan_kind == "equi") {
			if (!mod_given) scan_mod = 1;
			if (!residue_given) scan_residue = 0;
			params["mod"] = scan_mod;
			params["residue"] = scan_residue;
			s = etaq_scan_equi(expr, scan_mod, scan_residue, trunc, &raw);
		} else if (scan_kind == "link") {
			s = etaq_scan_link(trunc, &raw);
		}
		if (s != ETAQ_OK) die_status(s);
		ReportPtr report(raw);
		const int code = etaq_report_passed(report.get()) == 0 ? kExitVerifyFailed : kExitOk;
		return finish(output, "scan", std::move(params), report_json(report.get()), t0, code);
	}

	return kExitUsage;
}
