#include "hcn/arith.hpp"
#include "hcn/kernels.hpp"

#include <stdexcept>

#if defined(__aarch64__)
#include <arm_neon.h>

namespace hcn::kernels::detail {

void square_scan_neon(std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                      std::vector<std::int64_t>& out) {
    const double fstep = static_cast<double>(step);
    double init[2] = {static_cast<double>(step * lo - D), static_cast<double>(step * (lo + 1) - D)};
    float64x2_t v = vld1q_f64(init);
    const float64x2_t inc = vdupq_n_f64(2.0 * fstep);
    std::int64_t c = lo;
    for (; c + 1 <= hi; c += 2) {
        float64x2_t r = vrndnq_f64(vsqrtq_f64(v));
        uint64x2_t eq = vceqq_f64(vmulq_f64(r, r), v);
        if (vgetq_lane_u64(eq, 0) != 0 && is_square(step * c - D)) out.push_back(c);
        if (vgetq_lane_u64(eq, 1) != 0 && is_square(step * (c + 1) - D)) out.push_back(c + 1);
        v = vaddq_f64(v, inc);
    }
    for (; c <= hi; ++c) {
        if (is_square(step * c - D)) out.push_back(c);
    }
}

}  // namespace hcn::kernels::detail

#else

namespace hcn::kernels::detail {

void square_scan_neon(std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                      std::vector<std::int64_t>&) {
    throw std::logic_error("NEON kernel not built for this architecture");
}

}  // namespace hcn::kernels::detail

#endif
