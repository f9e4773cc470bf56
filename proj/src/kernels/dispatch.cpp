#include <atomic>

#include "efa/error.hpp"
#include "efa/kernels/kernels.hpp"
#include "kernels_internal.hpp"

namespace efa::kernels {

namespace {

constexpr KernelTable kScalar{Backend::scalar, detail::harmonic_sums_scalar,
                              detail::evaluate_series_scalar,
                              detail::morph_row_scalar};

#if defined(EFA_HAVE_AVX2)
constexpr KernelTable kAvx2{Backend::avx2, detail::harmonic_sums_avx2,
                            detail::evaluate_series_avx2,
                            detail::morph_row_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable* best_table() {
#if defined(EFA_HAVE_AVX2)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> t{best_table()};
  return t;
}

}  // namespace

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return kScalar; }

bool available(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:
#if defined(EFA_HAVE_AVX2)
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!available(b))
    throw Error(ErrorCode::BadParameter,
                "kernel backend " + std::string(to_string(b)) +
                    " is not available on this machine");
#if defined(EFA_HAVE_AVX2)
  if (b == Backend::avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Backend active_backend() { return active().backend; }

void select(Backend b) { current().store(&table(b), std::memory_order_release); }

}  // namespace efa::kernels
