#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bitseries.hpp"

namespace etaq {

// One factor f_t^e of an eta-quotient, with f_t = prod_{i>=1} (1 - q^{t i}).
struct EtaFactor {
	std::uint64_t t;
	std::int64_t e;
	bool operator==(const EtaFactor&) const = default;
};

// A finite product prod f_{t_i}^{e_i}, kept normalized: subscripts strictly
// ascending, no zero exponents. The empty product is the constant series 1.
class EtaExpr {
public:
	EtaExpr() = default;

	// Grammar (whitespace ignored):
	//   expr   := term ('/' term)?
	//   term   := factor ('*' factor)*
	//   factor := 'f' INT ('^' SIGNED_INT)? | '(' term ')'
	// Syntax errors carry the byte offset of the offending character.
	static EtaExpr parse(std::string_view text);

	// Normalizes: merges duplicate subscripts, drops zero exponents, sorts.
	static EtaExpr from_factors(std::vector<EtaFactor> factors);

	const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
	bool empty() const noexcept { return factors_.empty(); }

	// Canonical text form, e.g. "f1^-1*f3*f6^-1"; parseable except for the
	// empty product, which prints as "1".
	std::string str() const;

	bool operator==(const EtaExpr&) const = default;

private:
	std::vector<EtaFactor> factors_;
};

// Truncated Euler product f_t = prod (1 - q^{t i}) reduced mod 2, built by
// an actual product tree over the factors (never from the closed-form
// pentagonal support, which serves as an independent check instead).
BitSeries euler(std::uint64_t t, std::uint64_t trunc);

// prod f_t^e mod 2. Positive exponents are multiplied first; the negative
// part is grouped and inverted once.
BitSeries eval_eta(const EtaExpr& e, std::uint64_t trunc);

void clear_euler_cache();

// Exponent sets of the theta-type series that appear on the sparse side of
// the identities, enumerated directly (not through series arithmetic).
enum class SparseKind {
	pentagonal,     // n(3n-1)/2, n in Z
	triangular,     // n(n+1)/2,  n >= 0
	n3nm2,          // n(3n-2),   n in Z
	shifted_square, // (3n-1)^2,  n in Z
};

struct SparseSupport {
	SparseKind kind;
	std::uint64_t bound;                  // exponents < bound
	std::vector<std::uint64_t> exponents; // strictly increasing

	BitSeries to_series() const; // truncation = bound
	std::set<unsigned> residues_mod4() const;
};

SparseSupport sparse(SparseKind kind, std::uint64_t bound);

const char* sparse_kind_name(SparseKind kind);

} // namespace etaq
