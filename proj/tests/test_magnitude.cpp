#include <doctest.h>

#include "nonarch/eval.hpp"
#include "test_support.hpp"

using namespace nonarch;
using testing::Rng;

namespace {
Germ germ_of(const std::string& text) {
    return std::get<Germ>(lang::Evaluator{}.eval_text(text));
}
}  // namespace

TEST_CASE("classification by degree") {
    CHECK(classify(Germ::epsilon()) == Magnitude{MagnitudeKind::Infinitesimal, Sign::Positive});
    CHECK(classify(germ_of("(2*w+1)/(w+5)")) ==
          Magnitude{MagnitudeKind::FiniteAppreciable, Sign::Positive});
    CHECK(classify(germ_of("w^2/(w+1)")) ==
          Magnitude{MagnitudeKind::InfinitelyLarge, Sign::Positive});
    CHECK(classify(Germ{}) == Magnitude{MagnitudeKind::Infinitesimal, Sign::Zero});
    CHECK(classify(-Germ::omega()) ==
          Magnitude{MagnitudeKind::InfinitelyLarge, Sign::Negative});
}

TEST_CASE("classification agrees with the rational-threshold definition") {
    // Infinitesimal: |x| < r for every positive rational r; infinitely
    // large: |x| > r. Checked against thresholds spanning twelve decades.
    Rng rng(31);
    std::vector<ExactRational> thresholds = {ExactRational(BigInt(1), BigInt(1000000)),
                                             ExactRational(1),
                                             ExactRational(BigInt(1000000))};
    for (int i = 0; i < 200; ++i) {
        Germ x = testing::random_germ(rng, 5);
        Germ ax = x.sign() < 0 ? -x : x;
        Magnitude m = classify(x);
        for (const auto& r : thresholds) {
            Germ gr = Germ::from_rational(r);
            if (m.kind == MagnitudeKind::Infinitesimal) CHECK(ax < gr);
            if (m.kind == MagnitudeKind::InfinitelyLarge) CHECK(ax > gr);
        }
    }
}

TEST_CASE("standard part") {
    Germ x = germ_of("3 + 5*eps");
    CHECK(standard_part(x) == ExactRational(3));
    CHECK(standard_part(germ_of("(2*w+1)/(w+5)")) == ExactRational(2));
    CHECK_THROWS_AS(standard_part(Germ::omega()), NotFinite);
}

TEST_CASE("finite decomposition: x - st(x) is infinitesimal") {
    Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        Germ x = testing::random_finite_germ(rng);
        Germ frac = x - Germ::from_rational(standard_part(x));
        CHECK(is_infinitesimal(frac));
    }
}

TEST_CASE("monads and galaxies") {
    Germ three = Germ::from_rational(3);
    CHECK(in_monad(germ_of("3 + eps"), three));
    CHECK_FALSE(in_monad(Germ::from_rational(ExactRational(7, 2)), three));
    CHECK(in_galaxy(Germ::from_rational(ExactRational(7, 2)), three));
    CHECK(in_monad(germ_of("w + eps"), Germ::omega()));
    CHECK_FALSE(in_galaxy(Germ::omega(), Germ{}));
}

TEST_CASE("monad equivalence refines galaxy equivalence") {
    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        Germ x = testing::random_germ(rng, 4);
        Germ t = testing::random_germ(rng, 4);
        if (in_monad(x, t)) CHECK(in_galaxy(x, t));
    }
}

TEST_CASE("inversion map") {
    Germ w = Germ::omega();
    CHECK(inversion_map(w * w, Germ{}) == germ_of("1/w^2"));
    Germ five = Germ::from_rational(5);
    Germ image = inversion_map(w, five);
    CHECK(in_monad(image, five));
    CHECK(image != five);
    // Order reversal on positives.
    CHECK(w < w * w);
    CHECK(w.inverse() > (w * w).inverse());
    CHECK_THROWS_AS(inversion_map(Germ{}, Germ{}), DivisionByZero);
}

TEST_CASE("reciprocal duality is an involution") {
    Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        Germ x = testing::random_nonzero_germ(rng, 5);
        Magnitude mx = classify(x);
        Magnitude mi = classify(x.inverse());
        if (mx.kind == MagnitudeKind::InfinitelyLarge) {
            CHECK(mi.kind == MagnitudeKind::Infinitesimal);
            CHECK(mi.sign != Sign::Zero);
        }
        if (mx.kind == MagnitudeKind::Infinitesimal && mx.sign != Sign::Zero)
            CHECK(mi.kind == MagnitudeKind::InfinitelyLarge);
        CHECK(x.inverse().inverse() == x);
    }
}

TEST_CASE("inversion map reverses sampled ascending chains") {
    Germ w = Germ::omega();
    std::vector<Germ> chain = {w, w + Germ::from_rational(5), w * w, w.pow(3)};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(chain[i] < chain[i + 1]);
        CHECK(inversion_map(chain[i], Germ{}) > inversion_map(chain[i + 1], Germ{}));
    }
}

TEST_CASE("scaling cases from the worked examples") {
    Germ zero{}, one = Germ::from_rational(1);
    Germ eps = Germ::epsilon(), w = Germ::omega();

    ScalingCase c1 = scaling_case(zero, one);
    CHECK(c1.case_id == 1);
    CHECK(c1.gal_relation == GalaxyRelation::Subset);
    CHECK(c1.length_kind == MagnitudeKind::FiniteAppreciable);

    ScalingCase c2 = scaling_case(zero, eps);
    CHECK(c2.case_id == 2);
    CHECK(c2.gal_relation == GalaxyRelation::ContainsGalMinusPoint);

    ScalingCase c8 = scaling_case(w * w, eps);
    CHECK(c8.case_id == 8);
    CHECK(c8.gal_relation == GalaxyRelation::Disjoint);

    // Same row, but |t0| <= 1/u: the closed interval reaches Gal(0).
    ScalingCase c8b = scaling_case(w, eps);
    CHECK(c8b.case_id == 8);
    CHECK(c8b.gal_relation == GalaxyRelation::IntersectsPartially);

    CHECK(scaling_case(eps, one).case_id == 4);
    CHECK(scaling_case(w, w).case_id == 9);
    CHECK_THROWS_AS(scaling_case(zero, Germ{}), NonpositiveStep);
    CHECK_THROWS_AS(scaling_case(zero, -one), NonpositiveStep);
}

TEST_CASE("nine combinations collapse to six outcomes") {
    Germ one = Germ::from_rational(1), eps = Germ::epsilon(), w = Germ::omega();
    auto c = [](const Germ& t0, const Germ& u) { return scaling_case(t0, u); };
    CHECK(c(one, one).same_outcome(c(eps, one)));        // {1,4}
    CHECK(c(one, eps).same_outcome(c(eps, eps)));        // {2,5}
    CHECK(c(one, w).same_outcome(c(eps, w)));            // {3,6}
    CHECK_FALSE(c(w, one).same_outcome(c(w, eps)));      // 7 vs 8
    CHECK_FALSE(c(w, one).same_outcome(c(w, w)));        // 7 vs 9
    CHECK_FALSE(c(w * w, eps).same_outcome(c(w, w)));    // 8 vs 9
}

TEST_CASE("archimedean witness") {
    Germ w = Germ::omega(), one = Germ::from_rational(1), eps = Germ::epsilon();
    CHECK(archimedean_witness(one) == w);
    for (long long n : {1LL, 1000LL, 1000000LL}) {
        Germ nu = Germ::from_rational(ExactRational(n));
        CHECK(nu * one < archimedean_witness(one));
    }
    CHECK(archimedean_witness(eps) == one);
    for (long long n : {1LL, 1000LL, 1000000LL}) {
        Germ step = Germ::from_rational(ExactRational(n)) * eps;
        CHECK(classify(one - step).sign == Sign::Positive);
    }
    CHECK(archimedean_witness(w) == w * w);
    CHECK_THROWS_AS(archimedean_witness(Germ{}), NonpositiveStep);
}

TEST_CASE("standard part is a ring homomorphism on finite germs") {
    Rng rng(35);
    for (int i = 0; i < 100; ++i) {
        Germ x = testing::random_finite_germ(rng);
        Germ y = testing::random_finite_germ(rng);
        CHECK(standard_part(x + y) == standard_part(x) + standard_part(y));
        CHECK(standard_part(x * y) == standard_part(x) * standard_part(y));
    }
}
