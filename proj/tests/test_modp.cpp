#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "finst/modp.hpp"

using namespace finst::modp;

namespace {

std::uint64_t oracle_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::vector<std::uint64_t> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> d(0, kPrime - 1);
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = d(rng);
  // Edge values.
  if (n > 0) v[0] = kPrime - 1;
  if (n > 1) v[1] = 0;
  return v;
}

}  // namespace

TEST_CASE("reduction and multiplication") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> d(0, kPrime - 1);
  for (int i = 0; i < 10000; ++i) {
    const auto a = d(rng), b = d(rng);
    CHECK(mul(a, b) == oracle_mul(a, b));
  }
  CHECK(mul(kPrime - 1, kPrime - 1) == 1);
  CHECK(reduce(kPrime) == 0);
}

TEST_CASE("inverses") {
  for (std::uint64_t a : std::vector<std::uint64_t>{1, 2, 3, 12345, kPrime - 1}) CHECK(mul(a, inverse(a)) == 1);
  CHECK(pow(3, kPrime - 1) == 1);
}

TEST_CASE("scalar kernels match the definition") {
  std::mt19937_64 rng(2);
  auto dst = random_vec(rng, 37);
  const auto src = random_vec(rng, 37);
  auto expect = dst;
  for (std::size_t i = 0; i < dst.size(); ++i) expect[i] = (expect[i] + oracle_mul(5555, src[i])) % kPrime;
  scalar::axpy(dst, src, 5555);
  CHECK(dst == expect);
  auto v = src;
  scalar::scale(v, kPrime - 1);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == oracle_mul(kPrime - 1, src[i]));
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
  if (!avx2::available()) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> f(0, kPrime - 1);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 8u, 15u, 64u, 1001u}) {
    for (int rep = 0; rep < 20; ++rep) {
      auto a = random_vec(rng, n);
      auto b = a;
      const auto src = random_vec(rng, n);
      const auto factor = rep == 0 ? kPrime - 1 : f(rng);
      scalar::axpy(a, src, factor);
      avx2::axpy(b, src, factor);
      CHECK(a == b);
      scalar::scale(a, factor);
      avx2::scale(b, factor);
      CHECK(a == b);
    }
  }
}

TEST_CASE("dispatch") {
  const Isa isa = best_isa();
  if (std::getenv("FINST_FORCE_SCALAR")) CHECK(isa == Isa::Scalar);
  CHECK((isa == Isa::Scalar || avx2::available()));
  CHECK(std::string(isa_name(Isa::Scalar)) == "scalar");
  std::vector<std::uint64_t> v{1, 2, 3}, w{1, 2, 3};
  axpy(v, w, 2, Isa::Scalar);
  CHECK(v == std::vector<std::uint64_t>{3, 6, 9});
}
