#include "hcn/cusps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hcn {

CuspPoint CuspPoint::make(i64 num, i64 den) {
    if (den == 0) {
        if (num == 0) throw std::invalid_argument("0/0 is not a cusp");
        return infinity();
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = gcd(num, den);
    return {num / g, den / g};
}

CuspPoint CuspPoint::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    try {
        auto slash = text.find('/');
        std::size_t used = 0;
        if (slash == std::string::npos) {
            i64 v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return make(v, 1);
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        i64 num = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        i64 den = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return make(num, den);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed cusp '" + text + "'");
    }
}

std::string CuspPoint::str() const {
    if (den == 0) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

CuspPoint CuspClass::point() const {
    if (n == level) return CuspPoint::make(1, level);
    if (n == 1) return {0, 1};
    return CuspPoint::make(l, n);
}

std::string CuspClass::label() const {
    if (n == level) return "inf";
    if (n == 1) return "0";
    return std::to_string(l) + "/" + std::to_string(n);
}

bool cusp_equivalent(i64 M, const CuspPoint& s, const CuspPoint& t) {
    if (M < 1) throw std::invalid_argument("level must be positive");
    const CuspPoint a = CuspPoint::make(s.num, s.den);
    const CuspPoint b = CuspPoint::make(t.num, t.den);
    const i64 g = gcd(M, a.den);
    for (i64 d = 1; d <= M; ++d) {
        if (gcd(d, M) != 1) continue;
        if (mod(b.den - d * a.den, M) != 0) continue;
        if (mod(d * b.num - a.num, g) != 0) continue;
        return true;
    }
    return false;
}

std::vector<CuspClass> cusps(i64 M) {
    if (M < 1) throw std::invalid_argument("level must be positive");
    std::vector<CuspClass> out;
    for (i64 n : divisors(M)) {
        const i64 g = gcd(n, M / n);
        std::vector<i64> units;
        if (g == 1) units.push_back(0);
        for (i64 u = 1; u < g; ++u)
            if (gcd(u, g) == 1) units.push_back(u);
        for (i64 u : units) {
            CuspClass cls;
            cls.level = M;
            cls.n = n;
            if (n == M) {
                cls.l = 1;
            } else if (n == 1) {
                cls.l = 0;
            } else {
                i64 l = u == 0 ? 1 : u;
                while (gcd(l, n) != 1) l += g;
                cls.l = l;
            }
            cls.l_residue = mod(cls.l, g);
            const CuspPoint pt = cls.point();
            for (i64 m = 0; m < M; ++m) {
                if (cusp_equivalent(M, CuspPoint::make(m, M), pt)) {
                    cls.m_over_M = m;
                    break;
                }
            }
            out.push_back(cls);
        }
    }
    return out;
}

CuspClass cusp_class_of(i64 M, const CuspPoint& s) {
    for (const auto& c : cusps(M))
        if (cusp_equivalent(M, c.point(), s)) return c;
    throw std::logic_error("cusp " + s.str() + " matched no class");
}

CuspClass find_cusp(i64 M, const std::string& text) {
    for (const auto& c : cusps(M))
        if (c.label() == text) return c;
    return cusp_class_of(M, CuspPoint::parse(text));
}

CuspPoint apply(const IntMatrix2& g, const CuspPoint& s) {
    if (g.det() == 0) throw std::invalid_argument("apply: singular matrix");
    return CuspPoint::make(g.p * s.num + g.q * s.den, g.r * s.num + g.s * s.den);
}

ScaledMatrix gen_atkin_lehner(i64 M, i64 m) {
    if (M < 1) throw std::invalid_argument("level must be positive");
    if (m < 0 || m >= M) throw std::out_of_range("m must satisfy 0 <= m < M");
    if (m == 0) return {{0, -1, M, 0}, M};
    const i64 g = gcd(M, m);
    const i64 D = gcd(M, m * m);
    // g*m*v - M*u = D
    const Bezout bz = bezout(g * m, M);
    if (D % bz.g != 0) throw std::logic_error("gen_atkin_lehner: unsolvable defining relation");
    i64 v = bz.x * (D / bz.g);
    i64 u = -bz.y * (D / bz.g);
    // Shift along the solution line so that 1 <= u <= g*m/G.
    const i64 du = g * m / bz.g, dv = M / bz.g;
    const i64 k = floor_div(u - 1, du);
    u -= k * du;
    v -= k * dv;
    return {{m, u, M, g * v}, D};
}

EpsilonE epsilon_e(i64 M) { return {gcd(M, 24), gcd(M, 2)}; }

i64 normalizer_height(i64 M, const ScaledMatrix& W) {
    const auto [P, Q, R, S] = W.mat;
    const i64 D = W.scale;
    if (W.mat.det() != D) throw std::invalid_argument("normalizer_height: det(mat) != scale");
    const i64 f = square_part_root(M);
    i64 h = gcd(f, P);
    if (D % (h * h) != 0) throw std::logic_error("normalizer_height: scale not divisible by h^2");
    i64 e = D / (h * h);
    const i64 he = h * e;
    if (P % he != 0 || S % he != 0 || R % M != 0)
        throw std::logic_error("normalizer_height: matrix not in the expected shape");
    i64 p = P / he, q = Q, r = R / M, s = S / he;
    for (;;) {
        const i64 g1 = gcd(h, p, s), g2 = gcd(h, q, r);
        if (g1 * g2 == 1) break;
        h /= g1 * g2;
        e *= g1 * g1;
        p /= g1;
        s /= g1;
        q /= g2;
        r /= g2;
    }
    return h;
}

bool normalizes_gamma0(i64 M, i64 m) {
    const i64 h = normalizer_height(M, gen_atkin_lehner(M, m));
    return gcd(square_part_root(M), 24) % h == 0;
}

bool normalizes_g0(i64 M, i64 m) {
    const i64 h = normalizer_height(M, gen_atkin_lehner(M, m));
    return gcd(square_part_root(M), 2) % h == 0;
}

bool normalizes_gamma0_Mprime(i64 M, i64 Mp, i64 m) {
    if (Mp < 1 || M % Mp != 0) throw std::invalid_argument("M' must divide M");
    const i64 h = normalizer_height(M, gen_atkin_lehner(M, m));
    return gcd(square_part_root(M), Mp, 2 * M / Mp) % h == 0;
}

i64 involution_subgroup_level(i64 M, i64 m) {
    if (m < 0 || m >= M) throw std::out_of_range("m must satisfy 0 <= m < M");
    return M / gcd(square_part_root(M), m);
}

CuspPartition classify_cusps(i64 M) {
    const i64 f = square_part_root(M);
    CuspPartition part;
    for (const auto& c : cusps(M)) {
        const i64 g = gcd(c.n, M / c.n);
        if (gcd(f, 2) % g == 0)
            part.both.push_back(c);
        else if (gcd(f, 24) % g == 0)
            part.gamma0_only.push_back(c);
        else
            part.neither.push_back(c);
    }
    return part;
}

}  // namespace hcn
