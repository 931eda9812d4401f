#pragma once

// Vector kernels for arithmetic modulo the Mersenne prime p = 2^31 - 1.
//
// Every kernel has a portable scalar reference and an AVX2 variant; the
// dispatcher picks AVX2 at runtime when the CPU reports it.  Inputs must be
// fully reduced (< p); outputs are fully reduced.

#include <cstdint>
#include <span>

namespace finst::modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 31) - 1;

enum class Isa { Scalar, Avx2 };

Isa best_isa();
const char* isa_name(Isa isa);

inline std::uint64_t reduce(std::uint64_t x) {
  x = (x & kPrime) + (x >> 31);
  x = (x & kPrime) + (x >> 31);
  return x >= kPrime ? x - kPrime : x;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return reduce(a * b); }

std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inverse(std::uint64_t a);

/// dst[i] = dst[i] + f * src[i]  (mod p)
void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t f, Isa isa = best_isa());
/// v[i] = f * v[i]  (mod p)
void scale(std::span<std::uint64_t> v, std::uint64_t f, Isa isa = best_isa());

namespace scalar {
void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t f);
void scale(std::span<std::uint64_t> v, std::uint64_t f);
}  // namespace scalar

namespace avx2 {
bool available();
void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t f);
void scale(std::span<std::uint64_t> v, std::uint64_t f);
}  // namespace avx2

}  // namespace finst::modp
