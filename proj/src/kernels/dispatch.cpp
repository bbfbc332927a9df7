#include <cstdlib>

#include "qesd/errors.hpp"
#include "qesd/kernels.hpp"

namespace qesd::kernels {

#ifdef QESD_HAVE_AVX2_TU
const Ops* avx2_ops();
#endif
#ifdef QESD_HAVE_NEON_TU
const Ops* neon_ops();
#endif

const Ops* find(std::string_view name) {
  if (name == "scalar") return &scalar();
#ifdef QESD_HAVE_AVX2_TU
  if (name == "avx2" && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return avx2_ops();
#endif
#ifdef QESD_HAVE_NEON_TU
  if (name == "neon") return neon_ops();
#endif
  return nullptr;
}

namespace {

const Ops& select() {
  if (const char* forced = std::getenv("QESD_KERNELS")) {
    const Ops* ops = find(forced);
    if (!ops)
      throw config_error(std::string("QESD_KERNELS requests unavailable kernel set '") +
                         forced + "'");
    return *ops;
  }
#ifdef QESD_HAVE_AVX2_TU
  if (const Ops* ops = find("avx2")) return *ops;
#endif
#ifdef QESD_HAVE_NEON_TU
  if (const Ops* ops = find("neon")) return *ops;
#endif
  return scalar();
}

}  // namespace

const Ops& active() {
  static const Ops& ops = select();
  return ops;
}

}  // namespace qesd::kernels
