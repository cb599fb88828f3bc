#include "eta.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

namespace etaq {

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
	std::string_view s;
	std::size_t pos = 0;

	void skip_ws()
	{
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
	}

	bool eof()
	{
		skip_ws();
		return pos == s.size();
	}

	char peek()
	{
		skip_ws();
		return pos < s.size() ? s[pos] : '\0';
	}

	[[noreturn]] void fail(const std::string& msg, std::size_t at)
	{
		throw Error(errc::parse_error, msg + " at offset " + std::to_string(at), at);
	}

	std::uint64_t parse_uint()
	{
		skip_ws();
		const std::size_t start = pos;
		if (pos == s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
			fail("expected an integer", pos);
		std::uint64_t v = 0;
		while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
			const std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
			if (v > (UINT64_MAX - d) / 10) fail("integer too large", start);
			v = v * 10 + d;
			++pos;
		}
		return v;
	}

	std::int64_t parse_sint()
	{
		skip_ws();
		const std::size_t start = pos;
		bool neg = false;
		if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
			neg = s[pos] == '-';
			++pos;
		}
		const std::uint64_t mag = parse_uint();
		if (mag > static_cast<std::uint64_t>(INT64_MAX)) fail("exponent too large", start);
		return neg ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
	}

	void parse_factor(int sign, std::vector<EtaFactor>& out)
	{
		skip_ws();
		if (pos == s.size()) fail("expected 'f' or '('", pos);
		if (s[pos] == '(') {
			++pos;
			parse_term(sign, out);
			if (peek() != ')') fail("expected ')'", pos);
			++pos;
			return;
		}
		if (s[pos] != 'f') fail("expected 'f' or '('", pos);
		++pos;
		const std::size_t sub_at = pos;
		const std::uint64_t t = parse_uint();
		if (t == 0) fail("subscript must be positive", sub_at);
		std::int64_t e = 1;
		if (pos < s.size() && s[pos] == '^') {
			++pos;
			e = parse_sint();
		}
		out.push_back({t, sign * e});
	}

	void parse_term(int sign, std::vector<EtaFactor>& out)
	{
		parse_factor(sign, out);
		while (peek() == '*') {
			++pos;
			parse_factor(sign, out);
		}
	}

	std::vector<EtaFactor> parse_expr()
	{
		if (eof()) fail("empty expression", 0);
		std::vector<EtaFactor> out;
		parse_term(+1, out);
		if (peek() == '/') {
			++pos;
			parse_term(-1, out);
		}
		if (!eof()) fail("unexpected character", pos);
		return out;
	}
};

} // namespace

EtaExpr EtaExpr::parse(std::string_view text)
{
	Parser p{text};
	return from_factors(p.parse_expr());
}

EtaExpr EtaExpr::from_factors(std::vector<EtaFactor> factors)
{
	std::map<std::uint64_t, std::int64_t> merged;
	for (const auto& f : factors) {
		if (f.t == 0) throw Error(errc::invalid_argument, "subscript must be positive");
		merged[f.t] += f.e;
	}
	EtaExpr e;
	for (const auto& [t, exp] : merged)
		if (exp != 0) e.factors_.push_back({t, exp});
	return e;
}

std::string EtaExpr::str() const
{
	if (factors_.empty()) return "1";
	std::string out;
	for (const auto& f : factors_) {
		if (!out.empty()) out += '*';
		out += 'f';
		out += std::to_string(f.t);
		if (f.e != 1) {
			out += '^';
			out += std::to_string(f.e);
		}
	}
	return out;
}

// ---------------------------------------------------------------------------
// Euler products

namespace {

// prod (1 + q^{t i}) over t*i < trunc. Factors below trunc/2 are folded in
// ascending with shift-XOR, touching only the live prefix of the product
// (the degree sum bounds how far it can reach). Factors at or above
// trunc/2 cannot interact pairwise below the truncation, so their whole
// subproduct collapses to 1 + sum q^{t i} and costs a single
// multiplication.
BitSeries euler_product(std::uint64_t t, std::uint64_t trunc)
{
	BitSeries r = BitSeries::one(trunc);
	const std::uint64_t split = trunc / 2 + 1; // m >= split: q^{m+m'} dies
	std::uint64_t live = 1;                    // product is zero at degrees >= live

	std::uint64_t m = t;
	for (; m < split; m += t) {
		live = std::min(trunc, live + m);
		detail::xor_shift_bounded(r, m, live);
	}

	std::uint64_t tail_count = m < trunc ? (trunc - 1 - m) / t + 1 : 0;
	if (tail_count > 64) {
		BitSeries tail = BitSeries::one(trunc);
		for (; m < trunc; m += t)
			tail.words()[m / 64] |= std::uint64_t(1) << (m % 64);
		r = mul(r, tail);
	} else {
		for (; m < trunc; m += t) {
			live = std::min(trunc, live + m);
			detail::xor_shift_bounded(r, m, live);
		}
	}
	return r;
}

std::mutex g_euler_mutex;
std::map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const BitSeries>> g_euler_cache;

} // namespace

BitSeries euler(std::uint64_t t, std::uint64_t trunc)
{
	if (t == 0) throw Error(errc::invalid_argument, "subscript must be positive");
	if (trunc == 0) throw Error(errc::invalid_argument, "truncation must be positive");

	{
		std::lock_guard<std::mutex> lock(g_euler_mutex);
		auto it = g_euler_cache.find({t, trunc});
		if (it != g_euler_cache.end()) return *it->second;
	}

	BitSeries result = euler_product(t, trunc);

	{
		std::lock_guard<std::mutex> lock(g_euler_mutex);
		g_euler_cache.emplace(std::make_pair(t, trunc),
		                      std::make_shared<const BitSeries>(result));
	}
	return result;
}

void clear_euler_cache()
{
	std::lock_guard<std::mutex> lock(g_euler_mutex);
	g_euler_cache.clear();
}

BitSeries eval_eta(const EtaExpr& e, std::uint64_t trunc)
{
	if (trunc == 0) throw Error(errc::invalid_argument, "truncation must be positive");

	// One inversion total: numerator factors multiplied as they come, the
	// whole denominator assembled first and inverted once at the end.
	std::unique_ptr<BitSeries> num, den;
	auto fold = [trunc](std::unique_ptr<BitSeries>& acc, const BitSeries& f) {
		if (acc)
			*acc = mul(*acc, f);
		else
			acc = std::make_unique<BitSeries>(f);
	};

	for (const auto& f : e.factors()) {
		const BitSeries base = euler(f.t, trunc);
		if (f.e > 0)
			fold(num, pow(base, f.e));
		else
			fold(den, pow(base, -f.e));
	}

	if (!num && !den) return BitSeries::one(trunc);
	if (!den) return *num;
	BitSeries dinv = inv(*den);
	return num ? mul(*num, dinv) : dinv;
}

// ---------------------------------------------------------------------------
// sparse supports

SparseSupport sparse(SparseKind kind, std::uint64_t bound)
{
	if (bound == 0) throw Error(errc::invalid_argument, "bound must be positive");

	SparseSupport s{kind, bound, {}};
	auto push = [&s, bound](std::uint64_t v) {
		if (v < bound) s.exponents.push_back(v);
	};

	switch (kind) {
	case SparseKind::pentagonal:
		// k(3k-1)/2 then k(3k+1)/2 is ascending in k, so no sort needed.
		push(0);
		for (std::uint64_t k = 1;; ++k) {
			const std::uint64_t g = k * (3 * k - 1) / 2;
			if (g >= bound) break;
			push(g);
			push(k * (3 * k + 1) / 2);
		}
		break;
	case SparseKind::triangular:
		for (std::uint64_t k = 0;; ++k) {
			const std::uint64_t g = k * (k + 1) / 2;
			if (g >= bound) break;
			push(g);
		}
		break;
	case SparseKind::n3nm2:
		push(0);
		for (std::uint64_t k = 1;; ++k) {
			const std::uint64_t g = k * (3 * k - 2);
			if (g >= bound) break;
			push(g);
			push(k * (3 * k + 2));
		}
		break;
	case SparseKind::shifted_square:
		push(1); // n = 0 gives (3n-1)^2 = 1
		for (std::uint64_t k = 1;; ++k) {
			const std::uint64_t g = (3 * k - 1) * (3 * k - 1);
			if (g >= bound) break;
			push(g);
			push((3 * k + 1) * (3 * k + 1));
		}
		break;
	}
	return s;
}

BitSeries SparseSupport::to_series() const
{
	BitSeries r(bound);
	for (std::uint64_t e : exponents)
		r.words()[e / 64] |= std::uint64_t(1) << (e % 64);
	return r;
}

std::set<unsigned> SparseSupport::residues_mod4() const
{
	std::set<unsigned> rs;
	for (std::uint64_t e : exponents) rs.insert(static_cast<unsigned>(e % 4));
	return rs;
}

const char* sparse_kind_name(SparseKind kind)
{
	switch (kind) {
	case SparseKind::pentagonal: return "pentagonal";
	case SparseKind::triangular: return "triangular";
	case SparseKind::n3nm2: return "n3nm2";
	case SparseKind::shifted_square: return "shifted_square";
	}
	return "?";
}

} // namespace etaq
