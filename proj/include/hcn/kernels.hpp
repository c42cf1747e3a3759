#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace hcn::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

// Widest instruction set supported by this CPU and build.
Isa detect_isa();

// Instruction set used by square_scan; defaults to detect_isa().
Isa active_isa();
// Overrides the dispatch choice. Throws if the ISA is unavailable.
void set_active_isa(Isa isa);

// Values step*c - D must stay below 2^52 over the scanned range.
inline constexpr std::int64_t kScanLimit = std::int64_t{1} << 52;

// Appends every c in [lo, hi] with step*c - D a perfect square (including 0), in
// increasing order. Requires step >= 1 and step*hi - D < kScanLimit; c with
// step*c < D are skipped.
void square_scan(std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                 std::vector<std::int64_t>& out);
void square_scan(Isa isa, std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                 std::vector<std::int64_t>& out);

namespace detail {
// Each variant assumes lo*step >= D and the range limit already checked.
void square_scan_scalar(std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                        std::vector<std::int64_t>& out);
void square_scan_avx2(std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                      std::vector<std::int64_t>& out);
void square_scan_neon(std::int64_t step, std::int64_t D, std::int64_t lo, std::int64_t hi,
                      std::vector<std::int64_t>& out);
}  // namespace detail

}  // namespace hcn::kernels
