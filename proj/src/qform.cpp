#include "hcn/qform.hpp"

#include "hcn/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hcn {

std::string QForm::str() const {
    std::ostringstream os;
    os << '[' << a << ',' << b << ',' << c << ']';
    return os.str();
}

std::string IntMatrix2::str() const {
    std::ostringstream os;
    os << '(' << p << ' ' << q << "; " << r << ' ' << s << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QForm& q) { return os << q.str(); }
std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) { return os << m.str(); }

QForm make_level_form(i64 M, i64 a, i64 b, i64 c, i64 D) {
    if (M < 1) throw std::invalid_argument("level must be positive");
    if (a <= 0) throw std::invalid_argument("leading coefficient must be positive");
    QForm Q{M * a, b, c};
    if (Q.disc() != -D) throw std::invalid_argument("form " + Q.str() + " does not have the requested discriminant");
    return Q;
}

QForm act(const QForm& Q, const IntMatrix2& g) {
    if (g.det() != 1) throw std::invalid_argument("act: matrix " + g.str() + " is not in SL2(Z)");
    const auto [p, q, r, s] = g;
    return {Q.a * p * p + Q.b * p * r + Q.c * r * r,
            2 * Q.a * p * q + Q.b * (p * s + q * r) + 2 * Q.c * r * s,
            Q.a * q * q + Q.b * q * s + Q.c * s * s};
}

int automorph_order(const QForm& Q, i64 M) {
    if (M < 1) throw std::invalid_argument("automorph_order: level must be positive");
    if (Q.a <= 0) throw std::invalid_argument("automorph_order: leading coefficient must be positive");
    const i64 D = -Q.disc();
    if (D <= 0) throw std::invalid_argument("automorph_order: form is not positive definite");
    // Automorphs of k*Q' are those of the primitive Q'; they come from t^2 + (D/k^2) u^2 = 4.
    const i64 k = gcd(Q.a, Q.b, Q.c);
    const i64 a = Q.a / k, b = Q.b / k, c = Q.c / k;
    const i64 Dp = D / (k * k);
    int count = 0;
    for (i64 u = -1; u <= 1; ++u) {
        i64 rest = 4 - Dp * u * u;
        if (rest < 0) continue;
        i64 t = isqrt(rest);
        if (t * t != rest) continue;
        for (i64 tt : {t, -t}) {
            // ((t - bu)/2, -cu; au, (t + bu)/2) must be integral with lower-left in M Z.
            if (mod(tt - b * u, 2) == 0 && mod(a * u, M) == 0) ++count;
            if (t == 0) break;
        }
    }
    (void)c;
    return count;
}

namespace {

enum class Side { Both, Upper, Lower };

// Constraint r*|b| <= p*a + q*c (Both), r*b <= ... (Upper) or -r*b <= ... (Lower).
struct Wall {
    i64 p, q, r;
    Side side;
    bool tie = true;  // equality triggers the tie-break rule
};

struct LevelDomain {
    i64 M;
    std::vector<Wall> walls;
    i64 bound_num, bound_den, bound_add;  // a, c <= floor((num*D + add) / den)
    std::function<bool(i64 a, i64 b, i64 c)> tie_break;
};

i64 wall_lhs(const Wall& w, i64 b) {
    switch (w.side) {
        case Side::Both: return w.r * (b < 0 ? -b : b);
        case Side::Upper: return w.r * b;
        case Side::Lower: return -w.r * b;
    }
    return 0;
}

i64 wall_rhs(const Wall& w, i64 a, i64 c) { return w.p * a + w.q * c; }

i64 iabs(i64 x) { return x < 0 ? -x : x; }

const std::vector<LevelDomain>& domains() {
    static const std::vector<LevelDomain> table = [] {
        std::vector<LevelDomain> t;
        const auto B = Side::Both, U = Side::Upper, L = Side::Lower;
        t.push_back({4, {{4, 0, 1, B}, {0, 4, 1, B}}, 1, 8, 1, [](i64, i64 b, i64) { return b >= 0; }});
        t.push_back({6, {{6, 0, 1, B}, {0, 6, 1, B}, {12, 12, 5, B}}, 25, 24, 0,
                     [](i64, i64 b, i64) { return b >= 0; }});
        t.push_back({8,
                     {{8, 0, 1, B}, {0, 4, 1, U}, {0, 8, 1, L}, {16, 24, 7, L}, {16, 12, 5, L}},
                     245, 96, 0, [](i64 a, i64 b, i64) { return b >= -4 * a; }});
        t.push_back({9, {{9, 0, 1, B}, {0, 9, 1, B}, {3, 9, 2, B}, {15, 9, 4, B}}, 1, 1, 0,
                     [](i64 a, i64 b, i64 c) {
                         i64 ab = iabs(b);
                         if (4 * ab == 3 * (5 * a + 3 * c)) return false;
                         if (b < 0 && (ab == 9 * a || ab == 9 * c)) return false;
                         return true;
                     }});
        t.push_back({10, {{10, 0, 1, B}, {0, 6, 1, B}, {40, 30, 11, B}, {40, 20, 9, B}}, 121, 35, 0,
                     [](i64 a, i64 b, i64) { return 3 * b >= 20 * a || iabs(b) <= 6 * a; }});
        t.push_back({12,
                     {{12, 0, 1, B},
                      {24, 12, 5, B},
                      {24, 24, 7, B},
                      {0, 8, 1, U},
                      {0, 12, 1, L},
                      {24, 60, 11, L},
                      {24, 40, 9, L}},
                     1573, 240, 0, [](i64 a, i64 b, i64) { return -4 * a <= b && b <= 12 * a; }});
        t.push_back({16,
                     {{16, 0, 1, B},
                      {0, 8, 1, B},
                      {32, 24, 7, B},
                      {32, 12, 5, U},
                      {96, 48, 17, L},
                      {192, 80, 31, L},
                      {64, 20, 9, L}},
                     245, 192, 0,
                     [](i64 a, i64 b, i64) {
                         return iabs(b) <= 8 * a || 3 * b >= 32 * a || (-12 * a <= b && 3 * b <= -32 * a);
                     }});
        t.push_back({18,
                     {{18, 0, 1, B},
                      {0, 12, 1, B},
                      {36, 60, 11, B},
                      {72, 90, 19, B},
                      {36, 24, 7, B},
                      {36, 12, 5, B},
                      {72, 72, 17, B}},
                     361, 45, 0,
                     [](i64 a, i64 b, i64) {
                         i64 ab = iabs(b);
                         return ab <= 6 * a || (5 * b >= 36 * a && b <= 9 * a) ||
                                (12 * a <= ab && ab < 18 * a) || b == 18 * a;
                     }});
        t.push_back({25,
                     {{25, 0, 1, B},
                      {0, 10, 1, B},
                      {50, 40, 9, B},
                      {50, 24, 7, B},
                      {100, 30, 11, B},
                      {100, 20, 9, B}},
                     968, 175, 0,
                     [](i64 a, i64 b, i64) {
                         i64 ab = iabs(b);
                         return ab <= 10 * a || (14 * a <= ab && ab <= 20 * a) || b == 25 * a;
                     }});
        return t;
    }();
    return table;
}

const LevelDomain* find_domain(i64 M) {
    for (const auto& d : domains())
        if (d.M == M) return &d;
    return nullptr;
}

bool domain_accepts(const LevelDomain& dom, i64 a, i64 b, i64 c) {
    bool boundary = false;
    for (const auto& w : dom.walls) {
        i64 lhs = wall_lhs(w, b), rhs = wall_rhs(w, a, c);
        if (lhs > rhs) return false;
        if (lhs == rhs && w.tie) boundary = true;
    }
    return !boundary || dom.tie_break(a, b, c);
}

using i128 = __int128;

i128 isqrt128(i128 n) {
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

i128 floor_div128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct Interval {
    i64 lo, hi;
};

// Integer c in [1, cmax] where r^2 (4Mac - D) <= (pa + qc)^2 can hold for every wall
// in the set, as a sorted list of disjoint intervals. Conservative: never drops a
// feasible c.
std::vector<Interval> feasible_c(const LevelDomain& dom, const std::vector<const Wall*>& walls, i64 a,
                                 i64 D, i64 cmax) {
    i64 hi = cmax;
    std::vector<Interval> forbidden;
    const i128 M = dom.M;
    for (const Wall* w : walls) {
        const i128 p = w->p, q = w->q, r = w->r;
        const i128 alpha = q * q;
        const i128 beta = 2 * p * q * a - 4 * M * r * r * a;
        const i128 gamma = p * p * a * a + r * r * D;
        if (alpha == 0) {
            // -beta * c <= gamma
            i128 lim = floor_div128(gamma, -beta);
            if (lim < hi) hi = static_cast<i64>(lim);
            continue;
        }
        const i128 disc = beta * beta - 4 * alpha * gamma;
        if (disc <= 0) continue;
        const i128 s = isqrt128(disc);
        const i128 lo_f = floor_div128(-beta - s, 2 * alpha) + 1;
        const i128 hi_f = -floor_div128(-(-beta + s), 2 * alpha) - 1;  // ceil(x2) - 1
        if (lo_f > hi_f) continue;
        i128 l = std::max<i128>(lo_f, 1), h = std::min<i128>(hi_f, cmax);
        if (l > h) continue;
        forbidden.push_back({static_cast<i64>(l), static_cast<i64>(h)});
    }
    std::sort(forbidden.begin(), forbidden.end(), [](auto x, auto y) { return x.lo < y.lo; });
    std::vector<Interval> allowed;
    i64 cur = 1;
    for (const auto& f : forbidden) {
        if (cur > hi) break;
        if (f.lo > cur) allowed.push_back({cur, std::min(f.lo - 1, hi)});
        cur = std::max(cur, f.hi + 1);
    }
    if (cur <= hi) allowed.push_back({cur, hi});
    return allowed;
}

std::vector<Interval> merge(std::vector<Interval> xs) {
    std::sort(xs.begin(), xs.end(), [](auto x, auto y) { return x.lo < y.lo; });
    std::vector<Interval> out;
    for (const auto& x : xs) {
        if (!out.empty() && x.lo <= out.back().hi + 1)
            out.back().hi = std::max(out.back().hi, x.hi);
        else
            out.push_back(x);
    }
    return out;
}

std::vector<QForm> classical_reduced(i64 D) {
    std::vector<QForm> out;
    for (i64 a = 1; 3 * a * a <= D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 num = b * b + D;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const QForm& x, const QForm& y) {
        return std::tie(x.a, x.c, x.b) < std::tie(y.a, y.c, y.b);
    });
    return out;
}

}  // namespace

const std::vector<i64>& representative_levels() {
    static const std::vector<i64> levels = {1, 4, 6, 8, 9, 10, 12, 16, 18, 25};
    return levels;
}

bool has_representatives(i64 M) {
    const auto& ls = representative_levels();
    return std::find(ls.begin(), ls.end(), M) != ls.end();
}

i64 representative_bound(i64 M, i64 D) {
    if (M == 1) return isqrt(D / 3) + 1;
    const LevelDomain* dom = find_domain(M);
    if (dom == nullptr) throw std::invalid_argument("no representative set for level " + std::to_string(M));
    return floor_div(dom->bound_num * D + dom->bound_add, dom->bound_den);
}

bool in_representative_set(i64 M, i64 a, i64 b, i64 c) {
    if (a <= 0 || c <= 0) return false;
    if (M == 1) return -a < b && b <= a && a <= c && !(a == c && b < 0);
    const LevelDomain* dom = find_domain(M);
    if (dom == nullptr) throw std::invalid_argument("no representative set for level " + std::to_string(M));
    return domain_accepts(*dom, a, b, c);
}

std::vector<QForm> representatives(i64 M, i64 D, const RepresentativeOptions& opts) {
    if (!has_representatives(M)) throw std::invalid_argument("no representative set for level " + std::to_string(M));
    if (D <= 0) throw std::invalid_argument("representatives: D must be positive");
    if (D % 4 == 1 || D % 4 == 2) return {};
    if (M == 1) return classical_reduced(D);
    if (opts.bound_multiplier < 1) throw std::invalid_argument("bound multiplier must be positive");

    const LevelDomain& dom = *find_domain(M);
    const i64 bound = representative_bound(M, D) * opts.bound_multiplier;

    std::vector<const Wall*> upper, lower;
    for (const auto& w : dom.walls) {
        if (w.side != Side::Lower) upper.push_back(&w);
        if (w.side != Side::Upper) lower.push_back(&w);
    }

    std::vector<QForm> out;
    std::vector<i64> hits;
    for (i64 a = 1; a <= bound; ++a) {
        std::vector<Interval> runs;
        if (opts.prune) {
            auto up = feasible_c(dom, upper, a, D, bound);
            auto lo = feasible_c(dom, lower, a, D, bound);
            up.insert(up.end(), lo.begin(), lo.end());
            runs = merge(std::move(up));
        } else {
            runs.push_back({1, bound});
        }
        hits.clear();
        for (const auto& run : runs) kernels::square_scan(4 * M * a, D, run.lo, run.hi, hits);
        for (i64 c : hits) {
            i64 s = isqrt(4 * M * a * c - D);
            if (s > 0 && domain_accepts(dom, a, -s, c)) out.push_back({M * a, -s, c});
            if (domain_accepts(dom, a, s, c)) out.push_back({M * a, s, c});
        }
    }
    return out;
}

}  // namespace hcn
