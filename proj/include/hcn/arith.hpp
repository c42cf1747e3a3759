#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hcn {

using i64 = std::int64_t;

struct Bezout {
    i64 g;
    i64 x;
    i64 y;
};

i64 gcd(i64 a, i64 b);
i64 gcd(i64 a, i64 b, i64 c);

// a*x + b*y = gcd(a, b). Throws std::invalid_argument when a = b = 0.
Bezout bezout(i64 a, i64 b);

// Kronecker symbol (a | n) for n >= 1.
int kronecker(i64 a, i64 n);

// All ordered (a, d) with a*d = N, sorted by a.
std::vector<std::pair<i64, i64>> divisor_pairs(i64 N);
std::vector<i64> divisors(i64 N);

i64 sigma(i64 N);
i64 euler_phi(i64 N);

// [SL2(Z) : Gamma0(M)] = M * prod_{p | M} (1 + 1/p).
i64 sl2_index(i64 M);

// Largest f with M / f^2 square-free.
i64 square_part_root(i64 M);

// Floor square root for n >= 0.
i64 isqrt(i64 n);
bool is_square(i64 n);

// Floor / ceiling division with positive divisor.
i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);

// Representative in [0, m).
i64 mod(i64 a, i64 m);

bool is_prime(i64 n);

}  // namespace hcn
