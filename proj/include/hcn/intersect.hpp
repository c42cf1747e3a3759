#pragma once

#include "hcn/arith.hpp"
#include "hcn/cusps.hpp"
#include "hcn/rational.hpp"

#include <string>
#include <vector>

namespace hcn {

// 1 iff the cusp pair (s, t) can lie on the degree-N correspondence on X0(M):
// some (a b; 0 d) with ad = N, 0 <= b < d maps t into the class of s.
int delta_cusp_pair(i64 M, const CuspClass& s, const CuspClass& t, i64 N);

// Local intersection number of T_{N1} and T_{N2} at the cusp pair (s, t).
i64 cusp_multiplicity(i64 M, const CuspClass& s, const CuspClass& t, i64 N1, i64 N2);

// Sum of cusp_multiplicity over all ordered cusp pairs.
i64 total_cusp_multiplicity(i64 M, i64 N1, i64 N2);

// 2 sigma(N1) sigma(N2).
i64 global_intersection(i64 N1, i64 N2);

// True for the level-25 pairs N1 = +-N2 mod 5 handled by the special formula.
bool is_level25_special(i64 M, i64 N1, i64 N2);

// -1 + number of ordered cusp pairs on both T_{N1} and T_{N2}.
i64 delta_M(i64 M, i64 N1, i64 N2);

// Intersection number of T_{N1} and T_{N2} away from the cusps.
ExactRational affine_intersection(i64 M, i64 N1, i64 N2);

// sum_{x^2 < 4 N1 N2} sum_{d | (N1, N2, x)} d H^M((4 N1 N2 - x^2) / d^2)
ExactRational class_number_sum(i64 M, i64 N1, i64 N2);

struct EichlerCase {
    std::string label;
    i64 value;
};

// Divisor-sum right-hand side of the level-M Hurwitz-Eichler relation for N1 = 1.
EichlerCase hurwitz_eichler_case(i64 M, i64 N);
i64 hurwitz_eichler_rhs(i64 M, i64 N);

struct IdentityReport {
    i64 level = 0;
    i64 n1 = 0;
    i64 n2 = 0;
    ExactRational lhs;
    ExactRational rhs;
    std::string case_label;
    bool pass = false;
};

IdentityReport verify_identity(i64 M, i64 N1, i64 N2);

// S^M(N) = sum_{x^2 <= 4N} H^M(4N - x^2); M = 0 or 1 gives the classical sums.
ExactRational s_value(i64 M, i64 N);
std::vector<std::pair<i64, ExactRational>> s_table(i64 M, i64 n_max);

// Conjectured closed form of S^M(N) for square N coprime to M (divisor sum over ad = N).
IdentityReport verify_conjecture(i64 M, i64 N);

}  // namespace hcn
