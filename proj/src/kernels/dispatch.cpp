#include <cstdlib>
#include <stdexcept>
#include <string>

#include "antonim/kernels.hpp"

namespace antonim::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (available(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

const KernelTable& table_for(Isa isa) {
  if (!available(isa)) throw std::runtime_error("kernel variant not available: " + std::string(to_string(isa)));
  switch (isa) {
    case Isa::scalar:
      return scalar::table;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return avx2::table;
#else
      break;
#endif
  }
  return scalar::table;
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    if (const char* forced = std::getenv("ANTONIM_SIMD"); forced && std::string_view(forced) == "scalar")
      return scalar::table;
    if (available(Isa::avx2)) return table_for(Isa::avx2);
    return scalar::table;
  }();
  return chosen;
}

}  // namespace antonim::kernels
