#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace etaq {

enum class errc {
	ok = 0,
	invalid_argument,
	trunc_mismatch,
	out_of_range,
	not_invertible,
	parse_error,
	over_cap,
	unknown_tag,
	empty_class,
	even_class,
	internal,
};

// Library-wide exception. Parse errors carry the byte offset of the
// offending character; everything else leaves offset() == npos.
class Error : public std::runtime_error {
public:
	static constexpr std::size_t npos = static_cast<std::size_t>(-1);

	Error(errc code, const std::string& msg, std::size_t offset = npos)
		: std::runtime_error(msg), code_(code), offset_(offset) {}

	errc code() const noexcept { return code_; }
	std::size_t offset() const noexcept { return offset_; }

private:
	errc code_;
	std::size_t offset_;
};

} // namespace etaq
