#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bitseries.hpp"
#include "eta.hpp"

namespace etaq {

// The coefficient-parity stream of a(n): f3/(f1*f6).
const EtaExpr& a_expr();

// eval_eta with a process-wide cache keyed by (canonical expression, trunc);
// all scanners share one stream per configuration.
std::shared_ptr<const BitSeries> parity_stream(const EtaExpr& e, std::uint64_t trunc);
void clear_parity_cache();

struct TheoremScan {
	std::string expr;
	std::uint64_t trunc = 0;
	bool passed = false;
	std::optional<std::uint64_t> first_violation; // smallest odd index at 2,3 mod 4
};

// Checks that every coefficient at n congruent to 2 or 3 mod 4 is even.
TheoremScan verify_theorem(std::uint64_t trunc);
TheoremScan verify_theorem(const EtaExpr& e, std::uint64_t trunc);
TheoremScan scan_classes_2_3(const BitSeries& s); // same check on a given stream

struct DensityClass {
	std::uint64_t residue = 0;
	std::uint64_t class_size = 0;
	std::uint64_t odd_count = 0;
	double odd_fraction = 0.0;
};

struct DensityCheckpoint {
	std::uint64_t upto = 0;      // prefix bound
	std::uint64_t odd_count = 0; // cumulative, so the trace is monotone
	double odd_fraction = 0.0;
};

struct DensityReport {
	std::string expr;
	std::uint64_t trunc = 0;
	std::uint64_t modulus = 0;
	std::uint64_t total_odd = 0;
	double odd_fraction = 0.0; // conjectural limits are reported, never asserted
	std::vector<DensityClass> classes;
	std::vector<DensityCheckpoint> checkpoints; // at N/10 steps
};

DensityReport density(const EtaExpr& e, std::uint64_t trunc, std::uint64_t modulus);

enum class APStatus { odd_witness, even_up_to_n, insufficient_data };

struct APWitness {
	std::uint64_t modulus = 0;
	std::uint64_t residue = 0;
	APStatus status = APStatus::even_up_to_n;
	std::uint64_t witness = 0; // smallest odd index, valid for odd_witness
	bool subsumed = false;     // class lies inside {n = 2,3 mod 4}
};

struct APReport {
	std::string expr;
	std::uint64_t trunc = 0;
	std::uint64_t max_modulus = 0;
	std::vector<APWitness> witnesses; // sorted by (modulus, residue)
};

// For every modulus m <= max_modulus and residue r < m, the smallest odd
// witness below trunc or the even-up-to-N classification. Requires
// trunc >= 10 * max_modulus so no class is judged on a handful of samples.
APReport ap_scan(const EtaExpr& e, std::uint64_t trunc, std::uint64_t max_modulus);

// A class inside {2,3 mod 4} exactly when 4 | m and r mod 4 is 2 or 3.
bool ap_subsumed(std::uint64_t modulus, std::uint64_t residue);

struct EquiCheckpoint {
	std::uint64_t upto = 0;
	std::uint64_t class_size = 0;
	std::uint64_t odd_count = 0;
	double odd_fraction = 0.0;
};

struct EquiReport {
	std::string expr;
	std::uint64_t modulus = 0;
	std::uint64_t residue = 0;
	std::uint64_t trunc = 0;
	std::uint64_t class_size = 0;
	std::uint64_t odd_count = 0;
	double odd_fraction = 0.0;
	double max_deviation = 0.0; // max over checkpoints of |fraction - 1/2|
	std::vector<EquiCheckpoint> checkpoints;
};

// Purely descriptive statistics: equidistribution is an open question, so
// deviations are traced, never turned into a pass/fail threshold. Rejects
// empty classes and classes that are identically even below trunc.
EquiReport equidistribution(const EtaExpr& e, std::uint64_t modulus, std::uint64_t residue,
                            std::uint64_t trunc);

struct LinkMismatch {
	std::string component; // "4m" or "4m+1"
	std::uint64_t m = 0;
};

struct LinkReport {
	std::uint64_t trunc = 0;
	bool passed = false;
	std::uint64_t checked_even = 0; // indices 4m < trunc
	std::uint64_t checked_odd = 0;  // indices 4m+1 < trunc
	std::optional<LinkMismatch> first_mismatch;
};

// The residue-class decomposition of a(n) mod 2: coefficients at 4m follow
// f2/f3 and coefficients at 4m+1 follow the 6-regular stream f6/f1.
LinkReport check_remark1_link(std::uint64_t trunc);

// Same comparison on explicit streams (g2 and g6 at ceil(trunc/4)); lets the
// test suite confirm that a corrupted stream is actually caught.
LinkReport link_streams(const BitSeries& a, const BitSeries& g6, const BitSeries& g2);

} // namespace etaq
