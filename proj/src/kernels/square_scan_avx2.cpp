#include "hcn/arith.hpp"
#include "hcn/kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace hcn::kernels::detail {

// Four lanes of step*c - D in double (exact below 2^52); a lane survives when
// round(sqrt(v))^2 == v, then is confirmed with integer arithmetic.
__attribute__((target("avx2"))) void square_scan_avx2(std::int64_t step, std::int64_t D,
                                                      std::int64_t lo, std::int64_t hi,
                                                      std::vector<std::int64_t>& out) {
    const double fstep = static_cast<double>(step);
    __m256d v = _mm256_setr_pd(static_cast<double>(step * lo - D),
                               static_cast<double>(step * (lo + 1) - D),
                               static_cast<double>(step * (lo + 2) - D),
                               static_cast<double>(step * (lo + 3) - D));
    const __m256d inc = _mm256_set1_pd(4.0 * fstep);
    std::int64_t c = lo;
    for (; c + 3 <= hi; c += 4) {
        __m256d r = _mm256_round_pd(_mm256_sqrt_pd(v), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
        __m256d eq = _mm256_cmp_pd(_mm256_mul_pd(r, r), v, _CMP_EQ_OQ);
        int mask = _mm256_movemask_pd(eq);
        while (mask != 0) {
            int lane = __builtin_ctz(static_cast<unsigned>(mask));
            mask &= mask - 1;
            std::int64_t cc = c + lane;
            if (is_square(step * cc - D)) out.push_back(cc);
        }
        v = _mm256_add_pd(v, inc);
    }
    for (; c <= hi; ++c) {
        if (is_square(step * c - D)) out.push_back(c);
    }
}

}  // namespace hcn::kernels::detail

#else

namespace hcn::kernels::detail {

void square_scan_avx2(std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                      std::vector<std::int64_t>&) {
    throw std::logic_error("AVX2 kernel not built for this architecture");
}

}  // namespace hcn::kernels::detail

#endif
