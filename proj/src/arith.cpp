#include "hcn/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hcn {

i64 gcd(i64 a, i64 b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 gcd(i64 a, i64 b, i64 c) { return gcd(gcd(a, b), c); }

Bezout bezout(i64 a, i64 b) {
    if (a == 0 && b == 0) throw std::invalid_argument("bezout: both arguments are zero");
    i64 old_r = a, r = b;
    i64 old_x = 1, x = 0;
    i64 old_y = 0, y = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * x;
        old_x = x;
        x = t;
        t = old_y - q * y;
        old_y = y;
        y = t;
    }
    if (old_r < 0) return {-old_r, -old_x, -old_y};
    return {old_r, old_x, old_y};
}

i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

namespace {

int jacobi(i64 a, i64 n) {
    // n odd, n >= 1
    a = mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace

int kronecker(i64 a, i64 n) {
    if (n <= 0) throw std::invalid_argument("kronecker: modulus must be positive");
    int result = 1;
    while (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        i64 r = mod(a, 8);
        if (r == 3 || r == 5) result = -result;
        n /= 2;
    }
    return result * jacobi(a, n);
}

std::vector<std::pair<i64, i64>> divisor_pairs(i64 N) {
    if (N <= 0) throw std::invalid_argument("divisor_pairs: N must be positive");
    std::vector<std::pair<i64, i64>> out;
    for (i64 a : divisors(N)) out.emplace_back(a, N / a);
    return out;
}

std::vector<i64> divisors(i64 N) {
    if (N <= 0) throw std::invalid_argument("divisors: N must be positive");
    std::vector<i64> small, large;
    for (i64 a = 1; a * a <= N; ++a) {
        if (N % a != 0) continue;
        small.push_back(a);
        if (a * a != N) large.push_back(N / a);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

i64 sigma(i64 N) {
    if (N <= 0) throw std::invalid_argument("sigma: N must be positive");
    i64 s = 0;
    for (i64 d : divisors(N)) s += d;
    return s;
}

i64 euler_phi(i64 N) {
    if (N <= 0) throw std::invalid_argument("euler_phi: N must be positive");
    i64 result = N;
    for (i64 p = 2; p * p <= N; ++p) {
        if (N % p != 0) continue;
        while (N % p == 0) N /= p;
        result -= result / p;
    }
    if (N > 1) result -= result / N;
    return result;
}

i64 sl2_index(i64 M) {
    if (M <= 0) throw std::invalid_argument("sl2_index: M must be positive");
    i64 result = M;
    i64 n = M;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result += result / p;
    }
    if (n > 1) result += result / n;
    return result;
}

i64 square_part_root(i64 M) {
    if (M <= 0) throw std::invalid_argument("square_part_root: M must be positive");
    i64 f = 1;
    for (i64 p = 2; p * p <= M; ++p) {
        int e = 0;
        while (M % p == 0) {
            M /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
    }
    return f;
}

i64 isqrt(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of negative number");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    // Compare through division so r * r never overflows near 2^63.
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace hcn
