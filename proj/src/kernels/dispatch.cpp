#include <cstdlib>
#include <string>

#include "confbound/kernels.hpp"

namespace confbound::kernels {

#ifdef CONFBOUND_HAVE_AVX2_TU
const KernelTable* avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#ifdef CONFBOUND_HAVE_AVX2_TU
  return avx2_table_impl();
#else
  return nullptr;
#endif
}

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("CONFBOUND_ISA");
    if (env != nullptr && std::string(env) == "scalar") return &scalar_table();
    const KernelTable* avx = avx2_table();
    if (avx != nullptr && cpu_has_avx2()) return avx;
    return &scalar_table();
  }();
  return *chosen;
}

}  // namespace confbound::kernels
