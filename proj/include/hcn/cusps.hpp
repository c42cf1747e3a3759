#pragma once

#include "hcn/arith.hpp"
#include "hcn/qform.hpp"

#include <string>
#include <vector>

namespace hcn {

// A point of Q u {i*inf} as num/den in lowest terms with den >= 0; infinity is 1/0.
struct CuspPoint {
    i64 num = 1;
    i64 den = 0;

    static CuspPoint infinity() { return {1, 0}; }
    static CuspPoint make(i64 num, i64 den);
    // Parses "inf", "0", "l/n" or an integer.
    static CuspPoint parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const CuspPoint&, const CuspPoint&) = default;
};

struct CuspClass {
    i64 level = 1;
    i64 n = 1;            // denominator stratum, a divisor of level
    i64 l = 0;            // smallest positive numerator in the class (0 for n = 1)
    i64 l_residue = 0;    // l mod (n, level/n)
    i64 m_over_M = 0;     // smallest m in [0, level) with m/level in the class

    // Lowest-terms point l/n; the stratum n = level is represented by 1/level.
    CuspPoint point() const;
    // "inf" for the stratum n = level, "0" for n = 1, otherwise "l/n".
    std::string label() const;

    friend bool operator==(const CuspClass&, const CuspClass&) = default;
};

// (1/sqrt(scale)) * mat, with det(mat) = scale.
struct ScaledMatrix {
    IntMatrix2 mat;
    i64 scale = 1;

    friend bool operator==(const ScaledMatrix&, const ScaledMatrix&) = default;
};

bool cusp_equivalent(i64 M, const CuspPoint& s, const CuspPoint& t);

// One class per Gamma0(M)-orbit, ordered by stratum then l.
std::vector<CuspClass> cusps(i64 M);

// The class containing a point.
CuspClass cusp_class_of(i64 M, const CuspPoint& s);
// Looks up a class by label ("inf", "0", "l/n") or any equivalent point.
CuspClass find_cusp(i64 M, const std::string& text);

// Image of a cusp under an integral matrix with nonzero determinant.
CuspPoint apply(const IntMatrix2& g, const CuspPoint& s);

// Generalized Atkin-Lehner involution attached to 0 <= m < M.
ScaledMatrix gen_atkin_lehner(i64 M, i64 m);

struct EpsilonE {
    i64 epsilon;
    i64 e;
};
EpsilonE epsilon_e(i64 M);

// Smallest h with W in the group Gamma0^{*,h}(M) in reduced form.
i64 normalizer_height(i64 M, const ScaledMatrix& W);

bool normalizes_gamma0(i64 M, i64 m);
bool normalizes_g0(i64 M, i64 m);
// Normalizer of the subgroup of Gamma0(M) with diagonal entries congruent mod Mp.
bool normalizes_gamma0_Mprime(i64 M, i64 Mp, i64 m);
// M / (f, m), the natural subgroup level for W_m.
i64 involution_subgroup_level(i64 M, i64 m);

struct CuspPartition {
    std::vector<CuspClass> both;          // W(i*inf) with W normalizing Gamma0(M) and G0(M)
    std::vector<CuspClass> gamma0_only;   // normalizing Gamma0(M) but not G0(M)
    std::vector<CuspClass> neither;       // not reachable by a Gamma0(M) normalizer
};
CuspPartition classify_cusps(i64 M);

}  // namespace hcn
