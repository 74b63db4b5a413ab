#pragma once

// Shared generators and independent oracles for the test suites. Nothing in
// here reuses the canonicalization path it is used to check: oracle
// comparisons go through cross-multiplication and pointwise evaluation.

#include <random>

#include "nonarch/magnitude.hpp"

namespace nonarch::testing {

using Rng = std::mt19937_64;

inline ExactRational random_coeff(Rng& rng, long long magnitude = 1000) {
    std::uniform_int_distribution<long long> dist(-magnitude, magnitude);
    return ExactRational(dist(rng));
}

inline GermPolynomial random_poly(Rng& rng, int max_degree, bool nonzero = false,
                                  long long magnitude = 1000) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    for (;;) {
        int d = deg_dist(rng);
        std::vector<ExactRational> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = random_coeff(rng, magnitude);
        GermPolynomial p{std::move(c)};
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline Germ random_germ(Rng& rng, int max_degree = 8, long long magnitude = 1000) {
    return Germ(random_poly(rng, max_degree, false, magnitude),
                random_poly(rng, max_degree, true, magnitude));
}

inline Germ random_nonzero_germ(Rng& rng, int max_degree = 8) {
    for (;;) {
        Germ g = random_germ(rng, max_degree);
        if (!g.is_zero()) return g;
    }
}

/// Finite germ: numerator degree clamped at the denominator's.
inline Germ random_finite_germ(Rng& rng, int max_degree = 6) {
    for (;;) {
        GermPolynomial den = random_poly(rng, max_degree, true);
        int dd = den.degree();
        GermPolynomial num = random_poly(rng, dd);
        Germ g{num, den};
        if (is_finite(g)) return g;
    }
}

/// Positive germ for step lengths.
inline Germ random_positive_germ(Rng& rng, int max_degree = 6) {
    Germ g = random_nonzero_germ(rng, max_degree);
    return g.sign() > 0 ? g : -g;
}

/// Oracle equality: cross-multiplied polynomial identity, no gcd involved.
inline bool cross_mul_equal(const Germ& a, const Germ& b) {
    return a.num() * b.den() == b.num() * a.den();
}

/// Oracle sign at a concrete index (denominator must not vanish there).
inline int pointwise_sign(const Germ& g, const BigInt& n) {
    ExactRational x{n};
    return (g.num().eval(x) * g.den().eval(x)).sign();
}

}  // namespace nonarch::testing
