#include <bit>

#include "antonim/kernels.hpp"

namespace antonim::kernels::scalar {
namespace {

std::size_t first_zero_bit(std::span<const std::uint64_t> words) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w] != ~std::uint64_t{0})
      return w * 64 + static_cast<std::size_t>(std::countr_one(words[w]));
  }
  return words.size() * 64;
}

std::uint64_t xor_reduce(std::span<const std::uint64_t> values) {
  std::uint64_t acc = 0;
  for (std::uint64_t v : values) acc ^= v;
  return acc;
}

std::size_t xor3_nonzero(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                         std::span<const std::uint64_t> c, std::span<std::uint8_t> flags) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    flags[i] = (a[i] ^ b[i] ^ c[i]) != 0;
    count += flags[i];
  }
  return count;
}

}  // namespace

const KernelTable table{Isa::scalar, &first_zero_bit, &xor_reduce, &xor3_nonzero};

}  // namespace antonim::kernels::scalar
