#include "hcn/intersect.hpp"

#include "hcn/hurwitz.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace hcn {

namespace {

void require_coprime(i64 M, i64 N, const char* what) {
    if (N < 1) throw std::invalid_argument(std::string(what) + ": N must be positive");
    if (gcd(N, M) != 1) throw std::invalid_argument(std::string(what) + ": N must be coprime to the level");
}

void require_non_square(i64 N1, i64 N2, const char* what) {
    if (is_square(N1 * N2))
        throw std::invalid_argument(std::string(what) + ": N1*N2 is a square, the intersection is not proper");
}

class DeltaCache {
public:
    template <class F>
    int get(const std::tuple<i64, i64, i64, i64>& key, F&& compute) {
        {
            std::shared_lock lock(mu_);
            auto it = values_.find(key);
            if (it != values_.end()) return it->second;
        }
        int v = compute();
        std::unique_lock lock(mu_);
        values_.emplace(key, v);
        return v;
    }

private:
    std::shared_mutex mu_;
    std::map<std::tuple<i64, i64, i64, i64>, int> values_;
};

DeltaCache& delta_cache() {
    static DeltaCache c;
    return c;
}

bool level25_fifths(i64 M, const CuspClass& s) { return M == 25 && s.n == 5; }

}  // namespace

int delta_cusp_pair(i64 M, const CuspClass& s, const CuspClass& t, i64 N) {
    require_coprime(M, N, "delta_cusp_pair");
    const CuspPoint target = s.point();
    const CuspPoint source = t.point();
    return delta_cache().get({M, s.m_over_M, t.m_over_M, N}, [&] {
        for (const auto& [a, d] : divisor_pairs(N)) {
            for (i64 b = 0; b < d; ++b) {
                if (cusp_equivalent(M, target, apply({a, b, 0, d}, source))) return 1;
            }
        }
        return 0;
    });
}

i64 cusp_multiplicity(i64 M, const CuspClass& s, const CuspClass& t, i64 N1, i64 N2) {
    require_coprime(M, N1, "cusp_multiplicity");
    require_coprime(M, N2, "cusp_multiplicity");
    require_non_square(N1, N2, "cusp_multiplicity");
    if (delta_cusp_pair(M, s, t, N1) == 0 || delta_cusp_pair(M, s, t, N2) == 0) return 0;
    const bool restrict25 = level25_fifths(M, s) && level25_fifths(M, t);
    const i64 m = s.m_over_M, mp = t.m_over_M;
    i64 total = 0;
    for (const auto& [a1, d1] : divisor_pairs(N1)) {
        for (const auto& [a2, d2] : divisor_pairs(N2)) {
            if (restrict25 && (mod(a1 * m - d1 * mp, 25) != 0 || mod(a2 * m - d2 * mp, 25) != 0)) continue;
            total += std::min(a1 * d2, a2 * d1);
        }
    }
    return total;
}

i64 total_cusp_multiplicity(i64 M, i64 N1, i64 N2) {
    const auto cs = cusps(M);
    i64 total = 0;
    for (const auto& s : cs)
        for (const auto& t : cs) total += cusp_multiplicity(M, s, t, N1, N2);
    return total;
}

i64 global_intersection(i64 N1, i64 N2) { return 2 * sigma(N1) * sigma(N2); }

bool is_level25_special(i64 M, i64 N1, i64 N2) {
    return M == 25 && (mod(N1 - N2, 5) == 0 || mod(N1 + N2, 5) == 0);
}

i64 delta_M(i64 M, i64 N1, i64 N2) {
    require_coprime(M, N1, "delta_M");
    require_coprime(M, N2, "delta_M");
    if (is_level25_special(M, N1, N2))
        throw std::domain_error("delta_M: level 25 with N1 = +-N2 mod 5 uses the special affine formula");
    const auto cs = cusps(M);
    i64 count = 0;
    for (const auto& s : cs)
        for (const auto& t : cs) count += delta_cusp_pair(M, s, t, N1) * delta_cusp_pair(M, s, t, N2);
    return count - 1;
}

ExactRational affine_intersection(i64 M, i64 N1, i64 N2) {
    require_coprime(M, N1, "affine_intersection");
    require_coprime(M, N2, "affine_intersection");
    require_non_square(N1, N2, "affine_intersection");
    i64 total = 0;
    if (is_level25_special(M, N1, N2)) {
        for (const auto& [a1, d1] : divisor_pairs(N1)) {
            for (const auto& [a2, d2] : divisor_pairs(N2)) {
                const i64 x = a1 * d2, y = a2 * d1;
                total += x > y ? x - y : y - x;
                if (mod(x - y, 5) == 0) total -= 4 * std::min(x, y);
            }
        }
        return total;
    }
    const i64 delta = delta_M(M, N1, N2);
    for (const auto& [a1, d1] : divisor_pairs(N1)) {
        for (const auto& [a2, d2] : divisor_pairs(N2)) {
            const i64 x = a1 * d2, y = a2 * d1;
            if (x > y) total += 2 * (x - delta * y);
        }
    }
    return total;
}

ExactRational class_number_sum(i64 M, i64 N1, i64 N2) {
    require_genus_zero(M);
    require_coprime(M, N1, "class_number_sum");
    require_coprime(M, N2, "class_number_sum");
    const i64 P = 4 * N1 * N2;
    const i64 g12 = gcd(N1, N2);
    ExactRational total;
    for (i64 x = 0; x * x < P; ++x) {
        ExactRational term;
        for (i64 d : divisors(gcd(g12, x))) term += ExactRational(d) * hurwitz_level(M, (P - x * x) / (d * d));
        total += x == 0 ? term : ExactRational(2) * term;
    }
    return total;
}

EichlerCase hurwitz_eichler_case(i64 M, i64 N) {
    require_genus_zero(M);
    if (M == 1) throw std::invalid_argument("hurwitz_eichler_rhs: level must be at least 2");
    require_coprime(M, N, "hurwitz_eichler_rhs");
    if (is_square(N)) throw std::invalid_argument("hurwitz_eichler_rhs: N must not be a square");

    i64 abs_sum = 0;
    for (const auto& [a, d] : divisor_pairs(N)) abs_sum += a > d ? a - d : d - a;
    auto weighted = [N](i64 k) {
        i64 s = 0;
        for (const auto& [a, d] : divisor_pairs(N))
            if (a > d) s += 2 * (a - k * d);
        return s;
    };
    const i64 r3 = mod(N, 3), r4 = mod(N, 4), r5 = mod(N, 5), r6 = mod(N, 6);
    switch (M) {
        case 2: case 3: case 5: case 7: case 13: return {"1a", abs_sum};
        case 4: return {"2", weighted(2)};
        case 6: case 8: case 10: return {"3a", weighted(3)};
        case 9:
            if (r3 == 2) return {"1b", abs_sum};
            return {"3b", weighted(3)};
        case 12: return {"4a", weighted(5)};
        case 16:
            if (r4 == 3) return {"3c", weighted(3)};
            return {"4b", weighted(5)};
        case 18:
            if (r6 == 5) return {"3d", weighted(3)};
            return {"5", weighted(7)};
        case 25: {
            if (r5 == 2 || r5 == 3) return {"1c", abs_sum};
            i64 s = abs_sum;
            for (const auto& [a, d] : divisor_pairs(N))
                if (a > d && mod(a - d, 5) == 0) s -= 8 * d;
            return {"6", s};
        }
        default: break;
    }
    throw std::logic_error("hurwitz_eichler_rhs: no branch for level " + std::to_string(M));
}

i64 hurwitz_eichler_rhs(i64 M, i64 N) { return hurwitz_eichler_case(M, N).value; }

IdentityReport verify_identity(i64 M, i64 N1, i64 N2) {
    require_genus_zero(M);
    IdentityReport rep;
    rep.level = M;
    rep.n1 = N1;
    rep.n2 = N2;
    rep.rhs = affine_intersection(M, N1, N2);
    rep.lhs = class_number_sum(M, N1, N2);
    if (M >= 2 && (N1 == 1 || N2 == 1))
        rep.case_label = hurwitz_eichler_case(M, N1 * N2).label;
    else if (is_level25_special(M, N1, N2))
        rep.case_label = "level25-congruent";
    else
        rep.case_label = "delta=" + std::to_string(delta_M(M, N1, N2));
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

ExactRational s_value(i64 M, i64 N) {
    if (N < 1) throw std::invalid_argument("s_value: N must be positive");
    const i64 level = M == 0 ? 1 : M;
    require_genus_zero(level);
    ExactRational total;
    for (i64 x = 0; x * x <= 4 * N; ++x) {
        ExactRational h = hurwitz_level(level, 4 * N - x * x);
        total += x == 0 ? h : ExactRational(2) * h;
    }
    return total;
}

std::vector<std::pair<i64, ExactRational>> s_table(i64 M, i64 n_max) {
    if (n_max < 1) throw std::invalid_argument("s_table: N_max must be positive");
    std::vector<std::pair<i64, ExactRational>> out;
    for (i64 N = 1; N <= n_max; ++N) out.emplace_back(N, s_value(M, N));
    return out;
}

IdentityReport verify_conjecture(i64 M, i64 N) {
    const i64 level = M == 0 ? 1 : M;
    require_genus_zero(level);
    require_coprime(level, N, "verify_conjecture");
    if (!is_square(N)) throw std::invalid_argument("verify_conjecture: N must be a square");
    IdentityReport rep;
    rep.level = level;
    rep.n1 = 1;
    rep.n2 = N;
    rep.lhs = s_value(level, N);
    i64 rhs = 0;
    if (level == 25 && (mod(N, 5) == 1 || mod(N, 5) == 4)) {
        rep.case_label = "level25-congruent";
        for (const auto& [a, d] : divisor_pairs(N)) {
            rhs += a > d ? a - d : d - a;
            if (mod(a - d, 5) == 0) rhs -= 4 * std::min(a, d);
        }
    } else {
        const i64 delta = delta_M(level, 1, N);
        rep.case_label = "delta=" + std::to_string(delta);
        for (const auto& [a, d] : divisor_pairs(N)) rhs += std::max(a, d) - delta * std::min(a, d);
    }
    rep.rhs = rhs;
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace hcn
