#include "hcn/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hcn {

ExactRational::ExactRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    normalize();
}

void ExactRational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

std::int64_t ExactRational::to_int64() const {
    if (den_ != 1) throw std::overflow_error("rational " + str() + " is not an integer");
    if (num_ > std::numeric_limits<std::int64_t>::max() ||
        num_ < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer out of int64 range");
    return static_cast<std::int64_t>(num_);
}

std::string ExactRational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExactRational ExactRational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (text.empty() || slash == 0 || (slash != std::string::npos && slash + 1 == text.size()))
        throw std::invalid_argument("malformed rational '" + text + "'");
    try {
        if (slash == std::string::npos) return ExactRational(BigInt(text), BigInt(1));
        return ExactRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

}  // namespace hcn
