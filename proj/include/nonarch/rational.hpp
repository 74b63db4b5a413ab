#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <utility>

#include "nonarch/errors.hpp"

namespace nonarch {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar: reduced fraction, positive denominator, zero is 0/1.
/// All arithmetic is exact; there is no rounding anywhere in this library.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    ExactRational(BigInt n) : num_(std::move(n)), den_(1) {}
    ExactRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    ExactRational operator-() const {
        ExactRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    ExactRational operator+(const ExactRational& o) const {
        return ExactRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    ExactRational operator-(const ExactRational& o) const {
        return ExactRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    ExactRational operator*(const ExactRational& o) const {
        return ExactRational(num_ * o.num_, den_ * o.den_);
    }
    ExactRational operator/(const ExactRational& o) const {
        if (o.num_ == 0) throw DivisionByZero();
        return ExactRational(num_ * o.den_, den_ * o.num_);
    }

    ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
    ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }
    ExactRational& operator*=(const ExactRational& o) { return *this = *this * o; }
    ExactRational& operator/=(const ExactRational& o) { return *this = *this / o; }

    ExactRational inverse() const {
        if (num_ == 0) throw DivisionByZero();
        return ExactRational(den_, num_);
    }

    ExactRational abs() const { return num_ < 0 ? -*this : *this; }

    bool operator==(const ExactRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const ExactRational& o) const {
        BigInt lhs = num_ * o.den_;
        BigInt rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Smallest integer >= this value.
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && num_ % den_ != 0) ++q;
        return q;
    }

    ExactRational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        ExactRational base = *this, acc = 1;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Canonical text form: "p/q", "/q" omitted when q = 1.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

private:
    void reduce() {
        if (den_ == 0) throw DivisionByZero();
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

inline ExactRational operator+(long long a, const ExactRational& b) { return ExactRational(a) + b; }
inline ExactRational operator*(long long a, const ExactRational& b) { return ExactRational(a) * b; }

}  // namespace nonarch
