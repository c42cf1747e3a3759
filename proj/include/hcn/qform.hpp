#pragma once

#include "hcn/arith.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace hcn {

// aX^2 + bXY + cY^2
struct QForm {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    i64 disc() const { return b * b - 4 * a * c; }
    i64 eval(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
    std::string str() const;

    friend bool operator==(const QForm&, const QForm&) = default;
    friend auto operator<=>(const QForm&, const QForm&) = default;
};

// Rows (p q) / (r s).
struct IntMatrix2 {
    i64 p = 1;
    i64 q = 0;
    i64 r = 0;
    i64 s = 1;

    i64 det() const { return p * s - q * r; }
    bool in_gamma0(i64 M) const { return det() == 1 && r % M == 0; }
    std::string str() const;

    friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
        return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s, x.r * y.p + x.s * y.r,
                x.r * y.q + x.s * y.s};
    }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

std::ostream& operator<<(std::ostream& os, const QForm& q);
std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

// Level-aware constructor for [M*a, b, c] with a > 0; checks disc = -D.
QForm make_level_form(i64 M, i64 a, i64 b, i64 c, i64 D);

// (Q o g)(X, Y) = Q(pX + qY, rX + sY). Throws unless det(g) = 1.
QForm act(const QForm& Q, const IntMatrix2& g);

// Order of the stabilizer of a positive definite Q in Gamma0(M).
int automorph_order(const QForm& Q, i64 M);

// Levels with an explicit system of representatives.
const std::vector<i64>& representative_levels();
bool has_representatives(i64 M);

struct RepresentativeOptions {
    // Multiplies the a, c search bound; values > 1 are used to check the bound is sufficient.
    i64 bound_multiplier = 1;
    // Restrict c to intervals where the inequalities can hold; off means the plain double loop.
    bool prune = true;
};

// One form per Gamma0(M)-orbit of positive definite [M*a, b, c] with disc -D,
// sorted by (a, c, b).
std::vector<QForm> representatives(i64 M, i64 D, const RepresentativeOptions& opts = {});

// Membership predicate of the representative set for forms [M*a, b, c].
bool in_representative_set(i64 M, i64 a, i64 b, i64 c);

// Search bound on a, c for discriminant -D.
i64 representative_bound(i64 M, i64 D);

}  // namespace hcn
