#include "finst/modp.hpp"

#include <cassert>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define FINST_HAVE_X86 1
#endif

namespace finst::modp::avx2 {

#ifdef FINST_HAVE_X86

namespace {

// x < 2^62 -> canonical residue of x mod 2^31 - 1, lane-wise.
__attribute__((target("avx2"))) inline __m256i reduce62(__m256i x, __m256i p, __m256i pm1) {
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  __m256i ge = _mm256_cmpgt_epi64(x, pm1);
  return _mm256_sub_epi64(x, _mm256_and_si256(ge, p));
}

}  // namespace

bool available() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                                          std::uint64_t f) {
  assert(dst.size() == src.size());
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kPrime));
  const __m256i pm1 = _mm256_set1_epi64x(static_cast<long long>(kPrime - 1));
  const __m256i fv = _mm256_set1_epi64x(static_cast<long long>(f));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 4 <= n; i += 4) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i prod = reduce62(_mm256_mul_epu32(s, fv), p, pm1);
    __m256i r = reduce62(_mm256_add_epi64(prod, d), p, pm1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), r);
  }
  for (; i < n; ++i) dst[i] = reduce(dst[i] + reduce(f * src[i]));
}

__attribute__((target("avx2"))) void scale(std::span<std::uint64_t> v, std::uint64_t f) {
  const __m256i p = _mm256_set1_epi64x(static_cast<long long>(kPrime));
  const __m256i pm1 = _mm256_set1_epi64x(static_cast<long long>(kPrime - 1));
  const __m256i fv = _mm256_set1_epi64x(static_cast<long long>(f));
  std::size_t i = 0;
  const std::size_t n = v.size();
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v.data() + i), reduce62(_mm256_mul_epu32(x, fv), p, pm1));
  }
  for (; i < n; ++i) v[i] = reduce(f * v[i]);
}

#else

bool available() { return false; }
void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t f) {
  scalar::axpy(dst, src, f);
}
void scale(std::span<std::uint64_t> v, std::uint64_t f) { scalar::scale(v, f); }

#endif

}  // namespace finst::modp::avx2
