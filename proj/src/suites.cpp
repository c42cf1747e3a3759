#include "hcn/suites.hpp"

#include "hcn/hurwitz.hpp"
#include "hcn/intersect.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace hcn {

std::size_t SuiteReport::passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

std::vector<i64> suite_levels(i64 level) {
    if (level > 0) {
        require_genus_zero(level);
        return {level};
    }
    std::vector<i64> out;
    for (i64 M : genus_zero_levels())
        if (M >= 2) out.push_back(M);
    return out;
}

namespace {

using CaseFn = std::function<CaseOutcome()>;

SuiteReport run_cases(std::string name, bool proven, const std::vector<CaseFn>& fns, unsigned jobs) {
    SuiteReport rep;
    rep.suite = std::move(name);
    rep.proven = proven;
    rep.cases.resize(fns.size());
    parallel_for(fns.size(), jobs, [&](std::size_t i) {
        try {
            rep.cases[i] = fns[i]();
        } catch (const std::exception& e) {
            rep.cases[i].pass = false;
            rep.cases[i].detail = std::string("error: ") + e.what();
        }
    });
    return rep;
}

std::string params(i64 M, i64 N1, i64 N2) {
    return "M=" + std::to_string(M) + " N1=" + std::to_string(N1) + " N2=" + std::to_string(N2);
}

CaseOutcome identity_case(i64 M, i64 N1, i64 N2) {
    CaseOutcome c;
    c.name = params(M, N1, N2);
    auto rep = verify_identity(M, N1, N2);
    c.pass = rep.pass;
    c.detail = "[" + rep.case_label + "] lhs=" + rep.lhs.str() + " rhs=" + rep.rhs.str();
    return c;
}

std::string level_name(const char* prefix, i64 level) {
    return level == 1 ? std::string(prefix) : std::string(prefix) + "^" + std::to_string(level);
}

}  // namespace

SuiteReport run_eichler(const std::vector<i64>& levels, i64 max_n, unsigned jobs) {
    std::vector<CaseFn> fns;
    for (i64 M : levels)
        for (i64 N = 1; N <= max_n; ++N)
            if (gcd(N, M) == 1 && !is_square(N)) fns.push_back([M, N] { return identity_case(M, 1, N); });
    return run_cases("eichler", true, fns, jobs);
}

SuiteReport run_general(const std::vector<i64>& levels, i64 max_n, unsigned jobs) {
    std::vector<CaseFn> fns;
    for (i64 M : levels)
        for (i64 N1 = 1; N1 <= max_n; ++N1)
            for (i64 N2 = 1; N2 <= max_n; ++N2)
                if (gcd(N1, M) == 1 && gcd(N2, M) == 1 && !is_square(N1 * N2))
                    fns.push_back([M, N1, N2] { return identity_case(M, N1, N2); });
    return run_cases("general", true, fns, jobs);
}

SuiteReport run_tables(const FixtureSet& fixtures, unsigned jobs) {
    std::vector<CaseFn> fns;
    for (const auto& row : fixtures.class_numbers) {
        fns.push_back([row] {
            CaseOutcome c;
            c.name = level_name("H", row.level) + "(" + std::to_string(row.key) + ")";
            ExactRational got = hurwitz_level(row.level, row.key);
            c.pass = got == row.value;
            c.detail = "computed=" + got.str() + " table=" + row.value.str();
            return c;
        });
    }
    auto rep = run_cases("tables", true, fns, jobs);
    auto sums = run_sums(fixtures, jobs);
    rep.cases.insert(rep.cases.end(), sums.cases.begin(), sums.cases.end());
    return rep;
}

SuiteReport run_sums(const FixtureSet& fixtures, unsigned jobs) {
    std::vector<CaseFn> fns;
    for (const auto& row : fixtures.sums) {
        fns.push_back([row] {
            CaseOutcome c;
            c.name = level_name("S", row.level) + "(" + std::to_string(row.key) + ")";
            ExactRational got = s_value(row.level, row.key);
            c.pass = got == row.value;
            c.detail = "computed=" + got.str() + " table=" + row.value.str();
            return c;
        });
    }
    return run_cases("sums", true, fns, jobs);
}

SuiteReport run_conjecture(const std::vector<i64>& levels, i64 max_n, unsigned jobs) {
    std::vector<CaseFn> fns;
    for (i64 M : levels) {
        for (i64 r = 1; r * r <= max_n; ++r) {
            const i64 N = r * r;
            if (gcd(N, M) != 1) continue;
            fns.push_back([M, N] {
                CaseOutcome c;
                c.name = "M=" + std::to_string(M) + " N=" + std::to_string(N);
                auto rep = verify_conjecture(M, N);
                c.pass = rep.pass;
                c.detail = "[" + rep.case_label + "] lhs=" + rep.lhs.str() + " rhs=" + rep.rhs.str();
                return c;
            });
        }
    }
    return run_cases("conjecture", false, fns, jobs);
}

SuiteReport run_decompose(const std::vector<i64>& levels, i64 max_n, unsigned jobs) {
    std::vector<CaseFn> fns;
    for (i64 M : levels)
        for (i64 N1 = 1; N1 <= max_n; ++N1)
            for (i64 N2 = 1; N2 <= max_n; ++N2)
                if (gcd(N1, M) == 1 && gcd(N2, M) == 1 && !is_square(N1 * N2))
                    fns.push_back([M, N1, N2] {
                        CaseOutcome c;
                        c.name = params(M, N1, N2);
                        const i64 global = global_intersection(N1, N2);
                        const i64 affine = affine_intersection(M, N1, N2).to_int64();
                        const i64 cusp = total_cusp_multiplicity(M, N1, N2);
                        c.pass = global == affine + cusp;
                        c.detail = "global=" + std::to_string(global) + " affine=" + std::to_string(affine) +
                                   " cusps=" + std::to_string(cusp);
                        return c;
                    });
    return run_cases("decompose", true, fns, jobs);
}

}  // namespace hcn
