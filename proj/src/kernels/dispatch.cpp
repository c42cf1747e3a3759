#include "hcn/arith.hpp"
#include "hcn/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace hcn::kernels {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detect_isa() {
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

namespace {
std::atomic<Isa>& active_slot() {
    static std::atomic<Isa> slot{detect_isa()};
    return slot;
}
}  // namespace

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_available(isa))
        throw std::invalid_argument("instruction set " + std::string(isa_name(isa)) + " unavailable");
    active_slot().store(isa, std::memory_order_relaxed);
}

void square_scan(Isa isa, std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                 std::vector<std::int64_t>& out) {
    if (step < 1) throw std::invalid_argument("square_scan: step must be positive");
    lo = std::max(lo, ceil_div(D, step));
    if (lo > hi) return;
    if (hi > (kScanLimit + D) / step) throw std::out_of_range("square_scan: range exceeds exact double limit");
    switch (isa) {
        case Isa::Scalar: detail::square_scan_scalar(step, D, lo, hi, out); return;
        case Isa::Avx2: detail::square_scan_avx2(step, D, lo, hi, out); return;
        case Isa::Neon: detail::square_scan_neon(step, D, lo, hi, out); return;
    }
}

void square_scan(std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                 std::vector<std::int64_t>& out) {
    square_scan(active_isa(), step, D, lo, hi, out);
}

}  // namespace hcn::kernels
