#pragma once

// Data-parallel inner loops with a scalar reference and SIMD variants picked
// at runtime. Every variant must return exactly what the scalar one does.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace antonim::kernels {

enum class Isa : std::uint8_t { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;

  /// Index of the lowest clear bit across `words` (bit i of word w is value
  /// 64*w + i), or 64*words.size() if every bit is set.
  std::size_t (*first_zero_bit)(std::span<const std::uint64_t> words);

  /// Bitwise xor of all values; 0 for an empty span.
  std::uint64_t (*xor_reduce)(std::span<const std::uint64_t> values);

  /// flags[i] = (a[i] ^ b[i] ^ c[i]) != 0. Returns how many flags are set.
  /// All four spans must have the same length.
  std::size_t (*xor3_nonzero)(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                              std::span<const std::uint64_t> c, std::span<std::uint8_t> flags);
};

/// True if this build contains `isa` and the running CPU supports it.
bool available(Isa isa) noexcept;

/// Every variant usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// Throws std::runtime_error if `isa` is not available.
const KernelTable& table_for(Isa isa);

/// Best available variant. Setting ANTONIM_SIMD=scalar in the environment
/// forces the scalar kernels.
const KernelTable& active();

namespace scalar {
extern const KernelTable table;
}

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
extern const KernelTable table;
}
#endif

}  // namespace antonim::kernels
