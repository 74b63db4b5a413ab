#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {

/// Univariate polynomial in the generator w with exact rational coefficients,
/// stored by ascending power. The zero polynomial has an empty coefficient
/// vector and degree kNegInfDegree (below every integer).
class GermPolynomial {
public:
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    GermPolynomial() = default;
    explicit GermPolynomial(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    GermPolynomial(ExactRational constant) {  // NOLINT: implicit by design
        c_.push_back(std::move(constant));
        trim();
    }

    /// The monomial c * w^k.
    static GermPolynomial monomial(ExactRational c, int k) {
        if (c.is_zero()) return {};
        std::vector<ExactRational> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return GermPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }

    const ExactRational& leading() const { return c_.back(); }  // pre: not zero
    const std::vector<ExactRational>& coefficients() const { return c_; }

    ExactRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(k)];
    }

    bool is_one() const { return c_.size() == 1 && c_[0] == ExactRational(1); }

    GermPolynomial operator-() const {
        GermPolynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    GermPolynomial operator+(const GermPolynomial& o) const {
        std::vector<ExactRational> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] += c_[i];
            if (i < o.c_.size()) v[i] += o.c_[i];
        }
        return GermPolynomial(std::move(v));
    }

    GermPolynomial operator-(const GermPolynomial& o) const { return *this + (-o); }

    GermPolynomial operator*(const GermPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<ExactRational> v(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        return GermPolynomial(std::move(v));
    }

    bool operator==(const GermPolynomial& o) const { return c_ == o.c_; }

    ExactRational eval(const ExactRational& x) const {
        ExactRational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    static std::pair<GermPolynomial, GermPolynomial> divmod(const GermPolynomial& a,
                                                           const GermPolynomial& d) {
        if (d.is_zero()) throw DivisionByZero();
        GermPolynomial r = a;
        std::vector<ExactRational> q;
        if (a.degree() >= d.degree())
            q.resize(static_cast<std::size_t>(a.degree() - d.degree()) + 1);
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            ExactRational c = r.leading() / d.leading();
            q[static_cast<std::size_t>(k)] = c;
            r = r - monomial(c, k) * d;
        }
        return {GermPolynomial(std::move(q)), r};
    }

    /// Scale so the leading coefficient is 1.
    GermPolynomial monic() const {
        if (is_zero()) return {};
        GermPolynomial r = *this;
        const ExactRational lead = r.leading();
        for (auto& c : r.c_) c = c / lead;
        return r;
    }

    /// Monic gcd over the rationals. Uses a primitive pseudo-remainder
    /// sequence on integer images; a single modular image screens out the
    /// common coprime case cheaply first.
    static GermPolynomial gcd(const GermPolynomial& a, const GermPolynomial& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        if (coprime_mod_p(a, b)) return GermPolynomial(ExactRational(1));

        std::vector<BigInt> u = a.primitive_integer_image();
        std::vector<BigInt> v = b.primitive_integer_image();
        if (u.size() < v.size()) std::swap(u, v);
        while (!v.empty()) {
            std::vector<BigInt> r = pseudo_rem(u, v);
            make_primitive(r);
            u = std::move(v);
            v = std::move(r);
        }
        std::vector<ExactRational> g(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) g[i] = ExactRational(u[i]);
        return GermPolynomial(std::move(g)).monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    // Integer polynomial with content 1, proportional to *this.
    std::vector<BigInt> primitive_integer_image() const {
        BigInt lcm = 1;
        for (const auto& c : c_)
            lcm = lcm / boost::multiprecision::gcd(lcm, c.denominator()) * c.denominator();
        std::vector<BigInt> v(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i] = c_[i].numerator() * (lcm / c_[i].denominator());
        make_primitive(v);
        return v;
    }

    static void make_primitive(std::vector<BigInt>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        if (v.empty()) return;
        BigInt g = 0;
        for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
        for (auto& c : v) c /= g;
    }

    // Pseudo-remainder of primitive integer polynomials, deg u >= deg v.
    static std::vector<BigInt> pseudo_rem(std::vector<BigInt> u, const std::vector<BigInt>& v) {
        const BigInt& lv = v.back();
        while (u.size() >= v.size()) {
            BigInt lu = u.back();
            std::size_t shift = u.size() - v.size();
            for (std::size_t i = 0; i < u.size(); ++i) u[i] *= lv;
            for (std::size_t i = 0; i < v.size(); ++i) u[i + shift] -= lu * v[i];
            while (!u.empty() && u.back() == 0) u.pop_back();
        }
        return u;
    }

    // True only when gcd(a, b) = 1 is certain: both leading coefficients and
    // all coefficient denominators stay invertible mod p and the images are
    // coprime mod p. Any doubt falls through to the exact routine.
    static bool coprime_mod_p(const GermPolynomial& a, const GermPolynomial& b) {
        constexpr std::int64_t p = 2147483647;  // 2^31 - 1
        std::vector<std::int64_t> u, v;
        if (!mod_image(a, p, u) || !mod_image(b, p, v)) return false;
        if (static_cast<int>(u.size()) != a.degree() + 1) return false;
        if (static_cast<int>(v.size()) != b.degree() + 1) return false;
        while (!v.empty()) {
            mod_rem(u, v, p);
            std::swap(u, v);
        }
        return u.size() == 1;
    }

    static bool mod_image(const GermPolynomial& a, std::int64_t p, std::vector<std::int64_t>& out) {
        out.clear();
        for (const auto& c : a.c_) {
            std::int64_t n = static_cast<std::int64_t>(c.numerator() % p);
            std::int64_t d = static_cast<std::int64_t>(c.denominator() % p);
            if (d == 0) return false;
            if (n < 0) n += p;
            out.push_back(mulmod(n, inv_mod(d, p), p));
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return true;
    }

    static void mod_rem(std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v,
                        std::int64_t p) {
        std::int64_t inv = inv_mod(v.back(), p);
        while (u.size() >= v.size()) {
            std::int64_t c = mulmod(u.back(), inv, p);
            std::size_t shift = u.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i) {
                u[i + shift] = (u[i + shift] - mulmod(c, v[i], p)) % p;
                if (u[i + shift] < 0) u[i + shift] += p;
            }
            while (!u.empty() && u.back() == 0) u.pop_back();
        }
    }

    static std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
    }

    static std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
        std::int64_t r = 1, e = p - 2;
        a %= p;
        while (e > 0) {
            if (e & 1) r = mulmod(r, a, p);
            a = mulmod(a, a, p);
            e >>= 1;
        }
        return r;
    }

    std::vector<ExactRational> c_;
};

}  // namespace nonarch
