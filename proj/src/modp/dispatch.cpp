#include "finst/modp.hpp"

#include <cstdlib>
#include <cstring>

namespace finst::modp {

Isa best_isa() {
  static const Isa isa = [] {
    // FINST_FORCE_SCALAR pins the reference path, e.g. for equivalence runs.
    const char* force = std::getenv("FINST_FORCE_SCALAR");
    if (force != nullptr && std::strcmp(force, "0") != 0) return Isa::Scalar;
    return avx2::available() ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a = reduce(a);
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a) { return pow(a, kPrime - 2); }

void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t f, Isa isa) {
  if (isa == Isa::Avx2 && avx2::available()) avx2::axpy(dst, src, f);
  else scalar::axpy(dst, src, f);
}

void scale(std::span<std::uint64_t> v, std::uint64_t f, Isa isa) {
  if (isa == Isa::Avx2 && avx2::available()) avx2::scale(v, f);
  else scalar::scale(v, f);
}

}  // namespace finst::modp
