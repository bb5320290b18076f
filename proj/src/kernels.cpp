#include "levnum/kernels.hpp"

namespace levnum::kern {

#if defined(LEVNUM_HAVE_AVX2_TU)
const Ops& avx2_ops();

static bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}
#endif

const Ops& active() {
#if defined(LEVNUM_HAVE_AVX2_TU)
    static const Ops& chosen = cpu_has_avx2() ? avx2_ops() : scalar();
    return chosen;
#else
    return scalar();
#endif
}

std::vector<const Ops*> supported() {
    std::vector<const Ops*> out{&scalar()};
#if defined(LEVNUM_HAVE_AVX2_TU)
    if (cpu_has_avx2()) out.push_back(&avx2_ops());
#endif
    return out;
}

}  // namespace levnum::kern
