#include "scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "threads.hpp"

namespace etaq {

namespace {

constexpr std::uint64_t kMinClassSamples = 10;
constexpr std::uint64_t kMaxScanModulus = 10000;

std::mutex g_stream_mutex;
std::map<std::pair<std::string, std::uint64_t>, std::shared_ptr<const BitSeries>> g_stream_cache;

// Number of n < trunc with n congruent to r mod m.
std::uint64_t class_size_below(std::uint64_t r, std::uint64_t m, std::uint64_t trunc)
{
	return r >= trunc ? 0 : (trunc - 1 - r) / m + 1;
}

std::vector<std::uint64_t> checkpoint_positions(std::uint64_t trunc)
{
	std::vector<std::uint64_t> ps;
	for (unsigned j = 1; j <= 10; ++j) {
		const std::uint64_t p = trunc * j / 10;
		if (p > 0 && (ps.empty() || p != ps.back())) ps.push_back(p);
	}
	if (ps.empty() || ps.back() != trunc) ps.push_back(trunc);
	return ps;
}

} // namespace

const EtaExpr& a_expr()
{
	static const EtaExpr e = EtaExpr::parse("f3/(f1*f6)");
	return e;
}

std::shared_ptr<const BitSeries> parity_stream(const EtaExpr& e, std::uint64_t trunc)
{
	const auto key = std::make_pair(e.str(), trunc);
	{
		std::lock_guard<std::mutex> lock(g_stream_mutex);
		auto it = g_stream_cache.find(key);
		if (it != g_stream_cache.end()) return it->second;
	}
	auto s = std::make_shared<const BitSeries>(eval_eta(e, trunc));
	std::lock_guard<std::mutex> lock(g_stream_mutex);
	return g_stream_cache.emplace(key, std::move(s)).first->second;
}

void clear_parity_cache()
{
	std::lock_guard<std::mutex> lock(g_stream_mutex);
	g_stream_cache.clear();
}

TheoremScan scan_classes_2_3(const BitSeries& s)
{
	TheoremScan r{"", s.trunc(), true, std::nullopt};
	constexpr std::uint64_t mask23 = 0xCCCCCCCCCCCCCCCCull;
	const auto& w = s.words();
	for (std::size_t i = 0; i < w.size(); ++i) {
		const std::uint64_t v = w[i] & mask23;
		if (v) {
			r.passed = false;
			r.first_violation = 64 * i + static_cast<unsigned>(__builtin_ctzll(v));
			break;
		}
	}
	return r;
}

TheoremScan verify_theorem(const EtaExpr& e, std::uint64_t trunc)
{
	if (trunc < 4) throw Error(errc::invalid_argument, "truncation must be at least 4");
	TheoremScan r = scan_classes_2_3(*parity_stream(e, trunc));
	r.expr = e.str();
	return r;
}

TheoremScan verify_theorem(std::uint64_t trunc) { return verify_theorem(a_expr(), trunc); }

DensityReport density(const EtaExpr& e, std::uint64_t trunc, std::uint64_t modulus)
{
	if (modulus == 0) throw Error(errc::invalid_argument, "modulus must be positive");
	if (trunc < modulus)
		throw Error(errc::invalid_argument, "truncation must be at least the modulus");

	const auto stream = parity_stream(e, trunc);

	DensityReport rep;
	rep.expr = e.str();
	rep.trunc = trunc;
	rep.modulus = modulus;

	// Per-class tallies: each worker owns a chunk of the index range and a
	// private counter array; the integer-sum merge in fixed chunk order is
	// independent of the worker count.
	const unsigned chunks = worker_count();
	std::vector<std::vector<std::uint64_t>> local(chunks);
	parallel_chunks(stream->words().size(), chunks,
	                [&](unsigned c, std::uint64_t wlo, std::uint64_t whi) {
		                std::vector<std::uint64_t> counts(modulus, 0);
		                for (std::uint64_t w = wlo; w < whi; ++w) {
			                std::uint64_t x = stream->words()[w];
			                while (x) {
				                const std::uint64_t n =
				                    64 * w + static_cast<unsigned>(__builtin_ctzll(x));
				                counts[n % modulus]++;
				                x &= x - 1;
			                }
		                }
		                local[c] = std::move(counts);
	                });

	std::vector<std::uint64_t> odd(modulus, 0);
	for (const auto& counts : local)
		for (std::uint64_t r = 0; r < counts.size(); ++r) odd[r] += counts[r];

	for (std::uint64_t r = 0; r < modulus; ++r) {
		DensityClass dc;
		dc.residue = r;
		dc.class_size = class_size_below(r, modulus, trunc);
		dc.odd_count = odd[r];
		dc.odd_fraction =
		    dc.class_size ? static_cast<double>(dc.odd_count) / static_cast<double>(dc.class_size)
		                  : 0.0;
		rep.total_odd += dc.odd_count;
		rep.classes.push_back(dc);
	}
	rep.odd_fraction = static_cast<double>(rep.total_odd) / static_cast<double>(trunc);

	for (std::uint64_t p : checkpoint_positions(trunc)) {
		DensityCheckpoint cp;
		cp.upto = p;
		cp.odd_count = stream->popcount_below(p);
		cp.odd_fraction = static_cast<double>(cp.odd_count) / static_cast<double>(p);
		rep.checkpoints.push_back(cp);
	}
	return rep;
}

bool ap_subsumed(std::uint64_t modulus, std::uint64_t residue)
{
	return modulus % 4 == 0 && (residue % 4 == 2 || residue % 4 == 3);
}

APReport ap_scan(const EtaExpr& e, std::uint64_t trunc, std::uint64_t max_modulus)
{
	if (max_modulus == 0) throw Error(errc::invalid_argument, "max modulus must be positive");
	if (max_modulus > kMaxScanModulus)
		throw Error(errc::invalid_argument,
		            "moduli beyond " + std::to_string(kMaxScanModulus) + " are not supported");
	if (trunc < 10 * max_modulus)
		throw Error(errc::invalid_argument,
		            "truncation must be at least 10 * max_modulus so every class has samples");

	const auto stream = parity_stream(e, trunc);

	APReport rep;
	rep.expr = e.str();
	rep.trunc = trunc;
	rep.max_modulus = max_modulus;

	// Moduli are independent; a fixed partition of the modulus range keeps
	// the concatenated output identical for every worker count.
	const unsigned chunks = worker_count();
	std::vector<std::vector<APWitness>> local(chunks);
	parallel_chunks(max_modulus, chunks, [&](unsigned c, std::uint64_t mlo, std::uint64_t mhi) {
		std::vector<APWitness>& out = local[c];
		for (std::uint64_t m = mlo + 1; m <= mhi; ++m) {
			for (std::uint64_t r = 0; r < m; ++r) {
				APWitness w;
				w.modulus = m;
				w.residue = r;
				w.subsumed = ap_subsumed(m, r);
				const std::uint64_t size = class_size_below(r, m, trunc);
				std::uint64_t n = r;
				bool found = false;
				for (; n < trunc; n += m) {
					if (stream->coeff(n)) {
						found = true;
						break;
					}
				}
				if (found) {
					w.status = APStatus::odd_witness;
					w.witness = n;
				} else {
					w.status = size >= kMinClassSamples ? APStatus::even_up_to_n
					                                    : APStatus::insufficient_data;
				}
				out.push_back(w);
			}
		}
	});
	for (auto& part : local)
		rep.witnesses.insert(rep.witnesses.end(), part.begin(), part.end());
	return rep;
}

EquiReport equidistribution(const EtaExpr& e, std::uint64_t modulus, std::uint64_t residue,
                            std::uint64_t trunc)
{
	if (modulus == 0) throw Error(errc::invalid_argument, "modulus must be positive");
	if (residue >= modulus)
		throw Error(errc::invalid_argument, "residue must be smaller than the modulus");
	if (trunc == 0) throw Error(errc::invalid_argument, "truncation must be positive");

	const std::uint64_t size = class_size_below(residue, modulus, trunc);
	if (size == 0)
		throw Error(errc::empty_class, "no indices in this class below the truncation");

	const auto stream = parity_stream(e, trunc);

	EquiReport rep;
	rep.expr = e.str();
	rep.modulus = modulus;
	rep.residue = residue;
	rep.trunc = trunc;
	rep.class_size = size;

	const std::vector<std::uint64_t> cps = checkpoint_positions(trunc);
	std::size_t cp = 0;
	std::uint64_t seen = 0, odd = 0;
	auto flush_checkpoints = [&](std::uint64_t upto_exclusive) {
		while (cp < cps.size() && cps[cp] <= upto_exclusive) {
			EquiCheckpoint c;
			c.upto = cps[cp];
			c.class_size = seen;
			c.odd_count = odd;
			c.odd_fraction = seen ? static_cast<double>(odd) / static_cast<double>(seen) : 0.0;
			rep.checkpoints.push_back(c);
			++cp;
		}
	};

	for (std::uint64_t n = residue; n < trunc; n += modulus) {
		flush_checkpoints(n);
		++seen;
		if (stream->coeff(n)) ++odd;
	}
	flush_checkpoints(trunc);

	rep.odd_count = odd;
	rep.odd_fraction = static_cast<double>(odd) / static_cast<double>(size);
	if (odd == 0)
		throw Error(errc::even_class,
		            "class " + std::to_string(residue) + " mod " + std::to_string(modulus) +
		                " is identically even below " + std::to_string(trunc));

	for (const auto& c : rep.checkpoints) {
		if (c.class_size == 0) continue;
		rep.max_deviation = std::max(rep.max_deviation, std::abs(c.odd_fraction - 0.5));
	}
	return rep;
}

LinkReport link_streams(const BitSeries& a, const BitSeries& g6, const BitSeries& g2)
{
	LinkReport rep;
	rep.trunc = a.trunc();
	rep.passed = true;

	const std::uint64_t n = a.trunc();
	for (std::uint64_t m = 0; 4 * m < n; ++m) {
		if (a.coeff(4 * m) != g2.coeff(m)) {
			rep.passed = false;
			rep.first_mismatch = LinkMismatch{"4m", m};
			break;
		}
		rep.checked_even++;
		if (4 * m + 1 >= n) break;
		if (a.coeff(4 * m + 1) != g6.coeff(m)) {
			rep.passed = false;
			rep.first_mismatch = LinkMismatch{"4m+1", m};
			break;
		}
		rep.checked_odd++;
	}
	return rep;
}

LinkReport check_remark1_link(std::uint64_t trunc)
{
	if (trunc < 8) throw Error(errc::invalid_argument, "truncation must be at least 8");

	const std::uint64_t quarter = (trunc + 3) / 4;
	const auto a = parity_stream(a_expr(), trunc);
	const auto g6 = parity_stream(EtaExpr::parse("f6/f1"), quarter);
	const auto g2 = parity_stream(EtaExpr::parse("f2/f3"), quarter);
	return link_streams(*a, *g6, *g2);
}

} // namespace etaq
