#include "finst/modp.hpp"

#include <cassert>

namespace finst::modp::scalar {

void axpy(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t f) {
  assert(dst.size() == src.size());
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = reduce(dst[i] + reduce(f * src[i]));
}

void scale(std::span<std::uint64_t> v, std::uint64_t f) {
  for (auto& x : v) x = reduce(f * x);
}

}  // namespace finst::modp::scalar
