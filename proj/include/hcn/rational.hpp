#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hcn {

using BigInt = boost::multiprecision::cpp_int;

// Normalized exact rational: gcd(|num|, den) = 1 and den >= 1.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    ExactRational(BigInt n, BigInt d);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    // Throws std::overflow_error if the value is not an integer in int64 range.
    std::int64_t to_int64() const;

    std::string str() const;

    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(-a.num_, a.den_); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

    // Parses "p", "-p" or "p/q".
    static ExactRational parse(const std::string& text);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace hcn
