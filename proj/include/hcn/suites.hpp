#pragma once

#include "hcn/arith.hpp"
#include "hcn/fixtures.hpp"

#include <atomic>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hcn {

struct CaseOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    // False for suites that check conjectural statements; their failures are informational.
    bool proven = true;
    std::vector<CaseOutcome> cases;

    std::size_t passed() const;
    std::size_t failed() const { return cases.size() - passed(); }
    bool ok() const { return !proven || failed() == 0; }
};

unsigned default_jobs();

// Runs body(i) for i in [0, n) on up to `jobs` threads. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    std::vector<std::exception_ptr> errors(count);
    for (unsigned t = 0; t < count; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < n && !failed; i = next++) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
                failed = true;
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Levels 2..25 with genus zero, or just {level} when level > 0.
std::vector<i64> suite_levels(i64 level);

// verify_identity(M, 1, N) for non-square N <= max_n coprime to M.
SuiteReport run_eichler(const std::vector<i64>& levels, i64 max_n, unsigned jobs);
// verify_identity(M, N1, N2) for N1, N2 <= max_n coprime to M with non-square product.
SuiteReport run_general(const std::vector<i64>& levels, i64 max_n, unsigned jobs);
// Class-number golden tables.
SuiteReport run_tables(const FixtureSet& fixtures, unsigned jobs);
// Sum golden tables.
SuiteReport run_sums(const FixtureSet& fixtures, unsigned jobs);
// Conjectured closed form for square N <= max_n coprime to M; proven = false.
SuiteReport run_conjecture(const std::vector<i64>& levels, i64 max_n, unsigned jobs);
// 2 sigma(N1) sigma(N2) = affine + cusp contributions for N1, N2 <= max_n.
SuiteReport run_decompose(const std::vector<i64>& levels, i64 max_n, unsigned jobs);

}  // namespace hcn
