#include "hcn/hurwitz.hpp"

#include "hcn/qform.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

namespace hcn {

namespace {

class Memo {
public:
    template <class F>
    ExactRational get(i64 M, i64 D, F&& compute) {
        const std::pair<i64, i64> key{M, D};
        {
            std::shared_lock lock(mu_);
            auto it = values_.find(key);
            if (it != values_.end()) return it->second;
        }
        ExactRational v = compute();
        std::unique_lock lock(mu_);
        values_.emplace(key, v);
        return v;
    }

    void clear() {
        std::unique_lock lock(mu_);
        values_.clear();
    }

private:
    std::shared_mutex mu_;
    std::map<std::pair<i64, i64>, ExactRational> values_;
};

Memo& memo() {
    static Memo m;
    return m;
}

ExactRational weighted_count(i64 M, i64 D) {
    ExactRational total;
    for (const QForm& Q : representatives(M, D)) total += ExactRational(2, automorph_order(Q, M));
    return total;
}

bool is_choi_kim_prime(i64 p) { return p == 2 || p == 3 || p == 5 || p == 7 || p == 13; }

}  // namespace

const std::vector<i64>& genus_zero_levels() {
    static const std::vector<i64> levels = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
    return levels;
}

bool is_genus_zero(i64 M) {
    const auto& ls = genus_zero_levels();
    return std::find(ls.begin(), ls.end(), M) != ls.end();
}

void require_genus_zero(i64 M) {
    if (!is_genus_zero(M)) throw std::invalid_argument("level not genus zero: " + std::to_string(M));
}

ExactRational hurwitz_classical(i64 D) {
    if (D < 0) throw std::invalid_argument("hurwitz_classical: D must be non-negative");
    if (D == 0) return ExactRational(-1, 12);
    if (D % 4 == 1 || D % 4 == 2) return {};
    return memo().get(1, D, [D] { return weighted_count(1, D); });
}

ExactRational choi_kim(i64 p, i64 D) {
    if (!is_choi_kim_prime(p)) throw std::invalid_argument("choi_kim: p must be one of 2, 3, 5, 7, 13");
    if (D <= 0) throw std::invalid_argument("choi_kim: D must be positive");
    if (D % 4 == 1 || D % 4 == 2) return {};
    const i64 factor = 1 + kronecker(-D, p);
    if (factor == 0) return {};
    ExactRational inner = hurwitz_classical(D);
    if (D % (p * p) == 0) inner += ExactRational(p) * hurwitz_classical(D / (p * p));
    return ExactRational(factor) * inner;
}

ExactRational hurwitz_level(i64 M, i64 D) {
    require_genus_zero(M);
    if (D < 0) throw std::invalid_argument("hurwitz_level: D must be non-negative");
    if (D == 0) return ExactRational(-sl2_index(M), 12);
    if (D % 4 == 1 || D % 4 == 2) return {};
    if (M == 1) return hurwitz_classical(D);
    if (is_prime(M)) return choi_kim(M, D);
    return memo().get(M, D, [M, D] { return weighted_count(M, D); });
}

void clear_hurwitz_cache() { memo().clear(); }

}  // namespace hcn
