#include "hcn/rational.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

namespace hcn {
namespace {

ExactRational q(std::int64_t n, std::int64_t d) { return ExactRational(BigInt(n), BigInt(d)); }

TEST(ExactRational, NormalizesOnConstruction) {
    ExactRational r = q(6, -8);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 4);
    EXPECT_EQ(q(0, -5), ExactRational(0));
    EXPECT_EQ(q(0, 7).denominator(), 1);
    EXPECT_THROW(q(1, 0), std::domain_error);
}

TEST(ExactRational, Arithmetic) {
    EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
    EXPECT_EQ(q(1, 3) - q(1, 2), q(-1, 6));
    EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
    EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
    EXPECT_EQ(-q(5, 12), q(-5, 12));
    EXPECT_THROW(q(1, 2) / ExactRational(0), std::domain_error);
}

TEST(ExactRational, Ordering) {
    EXPECT_LT(q(-1, 12), ExactRational(0));
    EXPECT_GT(q(7, 3), ExactRational(2));
    EXPECT_LT(q(1, 3), q(1, 2));
    EXPECT_EQ(q(4, 6) <=> q(2, 3), std::strong_ordering::equal);
}

TEST(ExactRational, StringAndParseRoundTrip) {
    EXPECT_EQ(q(-5, 2).str(), "-5/2");
    EXPECT_EQ(ExactRational(12).str(), "12");
    EXPECT_EQ(ExactRational::parse("-1/12"), q(-1, 12));
    EXPECT_EQ(ExactRational::parse("4/6"), q(2, 3));
    EXPECT_EQ(ExactRational::parse("17"), ExactRational(17));
    EXPECT_THROW(ExactRational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(ExactRational::parse("x"), std::invalid_argument);
    std::ostringstream os;
    os << q(7, 3);
    EXPECT_EQ(os.str(), "7/3");

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-100000, 100000), den(1, 5000);
    for (int i = 0; i < 2000; ++i) {
        ExactRational r = q(num(rng), den(rng));
        ASSERT_EQ(ExactRational::parse(r.str()), r);
    }
}

TEST(ExactRational, ToInt64) {
    EXPECT_EQ(ExactRational(-42).to_int64(), -42);
    EXPECT_THROW(q(1, 2).to_int64(), std::overflow_error);
    BigInt huge = BigInt(1) << 80;
    EXPECT_THROW(ExactRational(huge, BigInt(1)).to_int64(), std::overflow_error);
}

TEST(ExactRational, FieldLawsOnRandomValues) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(-500, 500), den(1, 60);
    for (int i = 0; i < 3000; ++i) {
        ExactRational a = q(num(rng), den(rng)), b = q(num(rng), den(rng)), c = q(num(rng), den(rng));
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, ExactRational(0));
        if (b.sign() != 0) ASSERT_EQ((a / b) * b, a);
        ASSERT_EQ(gcd(a.numerator(), a.denominator()), 1);
    }
}

}  // namespace
}  // namespace hcn
