// AVX2 codegen is enabled per function so that no inline library code in
// this file is emitted with AVX2 instructions. Nothing here may run before
// available(Isa::avx2) has been checked.

#include "antonim/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace antonim::kernels::avx2 {
namespace {

#define ANTONIM_AVX2 __attribute__((target("avx2")))

ANTONIM_AVX2 std::size_t first_zero_bit(std::span<const std::uint64_t> span) {
  const std::uint64_t* words = span.data();
  const std::size_t n = span.size();
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t w = 0;
  for (; w + 4 <= n; w += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + w));
    const int full = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, ones)));
    if (full != 0xF) {
      const std::size_t lane = static_cast<std::size_t>(__builtin_ctz(~static_cast<unsigned>(full)));
      return (w + lane) * 64 + static_cast<std::size_t>(__builtin_ctzll(~words[w + lane]));
    }
  }
  for (; w < n; ++w) {
    if (words[w] != ~std::uint64_t{0})
      return w * 64 + static_cast<std::size_t>(__builtin_ctzll(~words[w]));
  }
  return n * 64;
}

ANTONIM_AVX2 std::uint64_t xor_reduce(std::span<const std::uint64_t> span) {
  const std::uint64_t* values = span.data();
  const std::size_t n = span.size();
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_xor_si256(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i)));
    acc1 = _mm256_xor_si256(acc1, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_xor_si256(acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i)));
  acc0 = _mm256_xor_si256(acc0, acc1);
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc0);
  std::uint64_t acc = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < n; ++i) acc ^= values[i];
  return acc;
}

ANTONIM_AVX2 std::size_t xor3_nonzero(std::span<const std::uint64_t> sa,
                                      std::span<const std::uint64_t> sb,
                                      std::span<const std::uint64_t> sc,
                                      std::span<std::uint8_t> sflags) {
  const std::uint64_t* a = sa.data();
  const std::uint64_t* b = sb.data();
  const std::uint64_t* c = sc.data();
  std::uint8_t* flags = sflags.data();
  const std::size_t n = sflags.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
    const __m256i x = _mm256_xor_si256(_mm256_xor_si256(va, vb), vc);
    const unsigned zero_mask =
        static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(x, zero))));
    for (unsigned lane = 0; lane < 4; ++lane) {
      const std::uint8_t f = ((zero_mask >> lane) & 1u) ? 0 : 1;
      flags[i + lane] = f;
      count += f;
    }
  }
  for (; i < n; ++i) {
    flags[i] = (a[i] ^ b[i] ^ c[i]) != 0;
    count += flags[i];
  }
  return count;
}

#undef ANTONIM_AVX2

}  // namespace

const KernelTable table{Isa::avx2, &first_zero_bit, &xor_reduce, &xor3_nonzero};

}  // namespace antonim::kernels::avx2

#endif
