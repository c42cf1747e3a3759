#include "hcn/arith.hpp"
#include "hcn/kernels.hpp"

namespace hcn::kernels::detail {

void square_scan_scalar(std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                        std::vector<std::int64_t>& out) {
    for (std::int64_t c = lo; c <= hi; ++c) {
        if (is_square(step * c - D)) out.push_back(c);
    }
}

}  // namespace hcn::kernels::detail
