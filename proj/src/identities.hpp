#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitseries.hpp"
#include "eta.hpp"

namespace etaq {

// Registry of the mod-2 congruences the library can check to an arbitrary
// truncation bound. Everything is verified numerically up to the bound,
// never symbolically.
enum class IdentityTag {
	gen_fn,        // exact over Z: f3/(f1*f6) = sum a(n) q^n  (oracle-capped)
	f6_eq_f3sq,    // f6 = f3^2
	pentagonal,    // f1 = sum over the generalized pentagonal exponents
	triangular,    // f1^3 = sum over the triangular exponents
	eq99,          // f1^3 = f3 + q f9^3
	eq33,          // f3^3/f1 = sum q^{n(3n-2)}  (3-core parity)
	eq12,          // f1^3 f3^3 = f1^12 + q f3^12
	eq44,          // 1/(f1 f3) = f8/f12 + q f24/f4
	f1p4_eq_f4,    // f1^4 = f4
	f3p4_eq_f12,   // f3^4 = f12
	frobenius,     // f_t^2 = f_{2t}, parameter t
	a_eq_inv_f1f3, // f3/(f1*f6) = 1/(f1 f3)
};

struct IdentityId {
	IdentityTag tag;
	std::uint64_t t = 0; // frobenius parameter
};

// Stable tag strings used by the CLI ("eq33", "frobenius_7", ...). '-' and
// '_' are interchangeable on input; unknown tags raise errc::unknown_tag.
IdentityId parse_identity_tag(std::string_view name);
std::string identity_name(const IdentityId& id);
std::vector<std::string> identity_tag_list();

struct Mismatch {
	std::uint64_t index;
	std::string lhs, rhs; // "0"/"1" for bits; decimal values for exact checks
};

struct VerifyReport {
	std::string name;
	std::uint64_t trunc = 0;
	bool passed = false;
	std::optional<Mismatch> first_mismatch; // present iff !passed
};

// Left and right series of the identity at truncation trunc. For gen_fn the
// sides are the mod-2 reductions (the exact comparison lives in verify).
std::pair<BitSeries, BitSeries> build_sides(const IdentityId& id, std::uint64_t trunc);

// Pass iff the two sides agree on all trunc coefficients; on failure the
// smallest disagreeing index is reported. gen_fn compares exact integer
// coefficients and is therefore oracle-capped.
VerifyReport verify(const IdentityId& id, std::uint64_t trunc);

// First-mismatch comparison used by verify and by the negative controls in
// the test suite (a verifier that cannot fail would prove nothing).
VerifyReport compare_series(std::string name, const BitSeries& lhs, const BitSeries& rhs);

enum class Proof { first, second, third };

Proof parse_proof_tag(std::string_view name);
std::string proof_name(Proof p);

// Verifies every displayed intermediate congruence of the chosen derivation,
// one report per link, ending with the residue-class conclusion that forces
// the coefficients at 2, 3 (mod 4) to vanish.
std::vector<VerifyReport> derivation_chain(Proof proof, std::uint64_t trunc);

} // namespace etaq
