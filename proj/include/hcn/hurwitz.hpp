#pragma once

#include "hcn/arith.hpp"
#include "hcn/rational.hpp"

#include <vector>

namespace hcn {

// The fourteen levels with X0(M) of genus zero: 1..10, 12, 13, 16, 18, 25.
const std::vector<i64>& genus_zero_levels();
bool is_genus_zero(i64 M);
// Throws std::invalid_argument("level not genus zero") otherwise.
void require_genus_zero(i64 M);

// H(D), with H(0) = -1/12.
ExactRational hurwitz_classical(i64 D);

// H^M(D), with H^M(0) = -[SL2(Z) : Gamma0(M)] / 12.
ExactRational hurwitz_level(i64 M, i64 D);

// (1 + (-D | p)) (H(D) + p H(D / p^2)) for p in {2, 3, 5, 7, 13}.
ExactRational choi_kim(i64 p, i64 D);

// Drops all memoized values.
void clear_hurwitz_cache();

}  // namespace hcn
