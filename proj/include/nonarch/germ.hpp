#pragma once

#include <compare>
#include <string>
#include <utility>

#include "nonarch/polynomial.hpp"

namespace nonarch {

/// Element of the computable non-Archimedean ordered field Q(w): a reduced
/// fraction of polynomials in the infinitely large generator w. Canonical
/// form (coprime parts, monic denominator) makes structural equality
/// coincide with field equality, and the eventual sign of the underlying
/// rational function decides the total order.
class Germ {
public:
    Germ() : num_(), den_(ExactRational(1)) {}
    Germ(ExactRational r) : num_(std::move(r)), den_(ExactRational(1)) {}  // NOLINT
    Germ(GermPolynomial num, GermPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static Germ from_rational(ExactRational r) { return Germ(std::move(r)); }

    /// The class of the identity sequence n -> n: infinitely large, positive.
    static Germ omega() { return Germ(GermPolynomial::monomial(1, 1), GermPolynomial(ExactRational(1))); }

    /// 1/w: the canonical positive infinitesimal.
    static Germ epsilon() { return Germ(GermPolynomial(ExactRational(1)), GermPolynomial::monomial(1, 1)); }

    const GermPolynomial& num() const { return num_; }
    const GermPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return den_.is_one() && num_.degree() <= 0; }

    /// Pre: is_rational(). The constant value.
    ExactRational as_rational() const { return num_.coeff(0); }

    int max_degree() const {
        if (is_zero()) return 0;
        return std::max(num_.degree(), den_.degree());
    }

    Germ operator-() const { return Germ(-num_, den_, already_canonical{}); }

    Germ operator+(const Germ& o) const {
        return Germ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Germ operator-(const Germ& o) const {
        return Germ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Germ operator*(const Germ& o) const { return Germ(num_ * o.num_, den_ * o.den_); }

    Germ operator/(const Germ& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Germ(num_ * o.den_, den_ * o.num_);
    }

    Germ inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Germ(den_, num_);
    }

    Germ pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Germ acc{ExactRational(1)};
        Germ base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Sign of the germ, i.e. the eventual sign of n -> num(n)/den(n).
    /// The denominator is monic, so this is the sign of the numerator's
    /// leading coefficient.
    int sign() const { return is_zero() ? 0 : num_.leading().sign(); }

    bool operator==(const Germ& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::strong_ordering operator<=>(const Germ& o) const {
        int s = (*this - o).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    ExactRational eval_at(const BigInt& n) const {
        ExactRational x{n};
        return num_.eval(x) / den_.eval(x);
    }

    /// An index N such that for every n >= N the sign of num(n)/den(n)
    /// equals sign() and den(n) != 0. Cauchy root bound on both parts.
    /// Pre: nonzero germ.
    BigInt eventual_sign_bound() const {
        if (is_zero()) throw ZeroGerm();
        BigInt bn = cauchy_bound(num_);
        BigInt bd = cauchy_bound(den_);
        return bn > bd ? bn : bd;
    }

    /// Canonical text form, e.g. "(2*w^2 + 1/3) / (w + 5)".
    std::string str() const {
        if (den_.is_one()) return poly_str(num_);
        return "(" + poly_str(num_) + ") / (" + poly_str(den_) + ")";
    }

private:
    struct already_canonical {};
    Germ(GermPolynomial num, GermPolynomial den, already_canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = GermPolynomial(ExactRational(1));
            return;
        }
        GermPolynomial g = GermPolynomial::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = GermPolynomial::divmod(num_, g).first;
            den_ = GermPolynomial::divmod(den_, g).first;
        }
        const ExactRational lead = den_.leading();
        if (!(lead == ExactRational(1))) {
            std::vector<ExactRational> n(num_.coefficients()), d(den_.coefficients());
            for (auto& c : n) c /= lead;
            for (auto& c : d) c /= lead;
            num_ = GermPolynomial(std::move(n));
            den_ = GermPolynomial(std::move(d));
        }
    }

    static BigInt cauchy_bound(const GermPolynomial& p) {
        // Roots lie strictly inside |x| < 1 + max |c_i| / |c_lead|.
        ExactRational m = 0;
        const ExactRational lead = p.leading().abs();
        for (int i = 0; i < p.degree(); ++i) {
            ExactRational r = p.coeff(i).abs() / lead;
            if (r > m) m = r;
        }
        return (ExactRational(1) + m).ceil();
    }

    static std::string poly_str(const GermPolynomial& p) {
        if (p.is_zero()) return "0";
        std::string out;
        for (int k = p.degree(); k >= 0; --k) {
            ExactRational c = p.coeff(k);
            if (c.is_zero()) continue;
            if (out.empty()) {
                if (c.sign() < 0) out += "-";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            ExactRational a = c.abs();
            if (k == 0) {
                out += a.str();
            } else {
                if (!(a == ExactRational(1))) out += a.str() + "*";
                out += (k == 1) ? "w" : "w^" + std::to_string(k);
            }
        }
        return out;
    }

    GermPolynomial num_;
    GermPolynomial den_;
};

}  // namespace nonarch
