#pragma once

#include <cstddef>
#include <cstdint>

namespace etaq::gf2 {

// dst[0 .. na+nb) must be zero on entry; receives the full carryless
// product a * b over GF(2)[x] packed in 64-bit words.
void mul_words(std::uint64_t* dst, const std::uint64_t* a, std::size_t na,
               const std::uint64_t* b, std::size_t nb);

void force_portable(bool on) noexcept;
bool clmul_active() noexcept;

} // namespace etaq::gf2
