// Sanity checks on the brute-force reference itself.
#include "oracle.hpp"

#include "hcn/qform.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace hcn {
namespace {

TEST(Oracle, ReducedFormsOfSmallDiscriminants) {
    EXPECT_EQ(oracle::reduced_forms(3), (std::vector<QForm>{{1, 1, 1}}));
    EXPECT_EQ(oracle::reduced_forms(4), (std::vector<QForm>{{1, 0, 1}}));
    EXPECT_EQ(oracle::reduced_forms(23).size(), 3u);
    EXPECT_EQ(oracle::sl2_stabilizer_order({1, 1, 1}), 6);
    EXPECT_EQ(oracle::sl2_stabilizer_order({1, 0, 1}), 4);
    EXPECT_EQ(oracle::sl2_stabilizer_order({2, 1, 3}), 2);
}

TEST(Oracle, ClassicalValues) {
    EXPECT_EQ(oracle::class_number(1, 3), ExactRational(BigInt(1), BigInt(3)));
    EXPECT_EQ(oracle::class_number(1, 12), ExactRational(BigInt(4), BigInt(3)));
    EXPECT_EQ(oracle::class_number(1, 23), ExactRational(3));
    EXPECT_EQ(oracle::class_number(1, 47), ExactRational(5));
    EXPECT_EQ(oracle::class_number(6, 23), ExactRational(12));
}

TEST(Oracle, ReductionTracksTransform) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<i64> e(-9, 9);
    for (int i = 0; i < 2000; ++i) {
        QForm R{1 + std::abs(e(rng)), e(rng), 0};
        R.c = 10 + std::abs(e(rng)) + (R.b * R.b) / (4 * R.a) + 1;
        i64 p = e(rng), r = e(rng);
        if (gcd(p, r) != 1) continue;
        Bezout bz = bezout(p, r);
        IntMatrix2 g{p, -bz.y, r, bz.x};
        QForm Q = act(R, g);
        auto red = oracle::reduce(Q);
        ASSERT_EQ(act(Q, red.g), red.reduced);
        ASSERT_EQ(red.reduced, oracle::reduce(R).reduced);
    }
}

TEST(Oracle, OrbitKeyIsInvariantUnderGamma0) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<i64> e(-12, 12);
    for (i64 M : {4, 9, 16, 25}) {
        for (const QForm& R : oracle::reduced_forms(140)) {
            // Lift R to a level-M form if some P^1 point is a zero.
            for (i64 x = 0; x < M; ++x)
                for (i64 y = 0; y < M; ++y) {
                    if (gcd(gcd(x, y), M) != 1 || mod(R.eval(x, y), M) != 0) continue;
                    QForm Q = oracle::lift_to_level(R, M, x, y);
                    ASSERT_EQ(mod(Q.a, M), 0);
                    auto key = oracle::orbit_key(Q, M);
                    for (int t = 0; t < 5; ++t) {
                        i64 q = e(rng), rr = M * e(rng);
                        if (gcd(q, rr) != 1 || rr == 0) continue;
                        Bezout b2 = bezout(rr, q);  // rr*x + q*y = 1
                        IntMatrix2 gamma{b2.y, -b2.x, rr, q};
                        ASSERT_TRUE(gamma.in_gamma0(M));
                        ASSERT_EQ(oracle::orbit_key(act(Q, gamma), M), key);
                    }
                }
        }
    }
}

TEST(Oracle, CuspEquivalenceSmallCases) {
    EXPECT_TRUE(oracle::cusps_equivalent(6, 1, 0, 1, 6));
    EXPECT_FALSE(oracle::cusps_equivalent(9, 1, 3, 2, 3));
    EXPECT_TRUE(oracle::cusps_equivalent(4, 0, 1, 1, 1));
    EXPECT_FALSE(oracle::cusps_equivalent(4, 0, 1, 1, 2));
}

TEST(Oracle, ConjugationByClassicalInvolution) {
    // (0 -1; M 0) normalizes Gamma0(M); (1 1; 0 2) does not for M = 3.
    EXPECT_TRUE(oracle::conjugation_preserves_gamma0(6, {0, -1, 6, 0}, 6, 20));
    EXPECT_FALSE(oracle::conjugation_preserves_gamma0(3, {1, 1, 0, 2}, 2, 20));
}

}  // namespace
}  // namespace hcn
