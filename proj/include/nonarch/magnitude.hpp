#pragma once

#include <string>

#include "nonarch/germ.hpp"

namespace nonarch {

enum class MagnitudeKind { Infinitesimal, FiniteAppreciable, InfinitelyLarge };
enum class Sign { Negative, Zero, Positive };

/// Three-way size classification of a germ plus its sign. Zero classifies
/// as (Infinitesimal, Zero); "finite" means Infinitesimal or
/// FiniteAppreciable.
struct Magnitude {
    MagnitudeKind kind;
    Sign sign;

    bool is_finite() const { return kind != MagnitudeKind::InfinitelyLarge; }
    bool operator==(const Magnitude&) const = default;
};

inline const char* to_string(MagnitudeKind k) {
    switch (k) {
        case MagnitudeKind::Infinitesimal: return "infinitesimal";
        case MagnitudeKind::FiniteAppreciable: return "finite";
        case MagnitudeKind::InfinitelyLarge: return "infinite";
    }
    return "";
}

inline const char* to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "neg";
        case Sign::Zero: return "zero";
        case Sign::Positive: return "pos";
    }
    return "";
}

inline std::string to_string(const Magnitude& m) {
    return std::string(to_string(m.kind)) + "," + to_string(m.sign);
}

/// Degree criterion: deg num < deg den -> infinitesimal, equal -> appreciable,
/// greater -> infinitely large.
inline Magnitude classify(const Germ& x) {
    Sign s = x.sign() < 0 ? Sign::Negative : (x.sign() > 0 ? Sign::Positive : Sign::Zero);
    if (x.is_zero()) return {MagnitudeKind::Infinitesimal, s};
    int dn = x.num().degree(), dd = x.den().degree();
    if (dn < dd) return {MagnitudeKind::Infinitesimal, s};
    if (dn == dd) return {MagnitudeKind::FiniteAppreciable, s};
    return {MagnitudeKind::InfinitelyLarge, s};
}

inline bool is_finite(const Germ& x) { return classify(x).is_finite(); }
inline bool is_infinitesimal(const Germ& x) {
    return classify(x).kind == MagnitudeKind::Infinitesimal;
}
inline bool is_infinitely_large(const Germ& x) {
    return classify(x).kind == MagnitudeKind::InfinitelyLarge;
}

/// The unique rational s with x - s infinitesimal.
/// Pre: x finite; throws NotFinite otherwise.
inline ExactRational standard_part(const Germ& x) {
    Magnitude m = classify(x);
    if (!m.is_finite()) throw NotFinite();
    if (m.kind == MagnitudeKind::Infinitesimal) return 0;
    // Denominator is monic, so the leading-coefficient ratio is just the
    // numerator's leading coefficient.
    return x.num().leading();
}

inline bool in_monad(const Germ& x, const Germ& t) { return is_infinitesimal(x - t); }
inline bool in_galaxy(const Germ& x, const Germ& t) { return is_finite(x - t); }

/// The self-similarity t -> 1/t + t0: order reversing, exchanges the
/// infinitely large elements with the punctured monad of t0.
inline Germ inversion_map(const Germ& t, const Germ& t0) {
    if (t.is_zero()) throw DivisionByZero();
    return t.inverse() + t0;
}

/// x = u * w with n * u < x for every natural n: the Archimedean property
/// fails at step u. Pre: u > 0.
inline Germ archimedean_witness(const Germ& u) {
    if (u.sign() <= 0) throw NonpositiveStep();
    return u * Germ::omega();
}

enum class GalaxyRelation { Subset, ContainsGalMinusPoint, Disjoint, IntersectsPartially };

inline const char* to_string(GalaxyRelation r) {
    switch (r) {
        case GalaxyRelation::Subset: return "subset";
        case GalaxyRelation::ContainsGalMinusPoint: return "contains-gal-minus-point";
        case GalaxyRelation::Disjoint: return "disjoint";
        case GalaxyRelation::IntersectsPartially: return "intersects-partially";
    }
    return "";
}

/// One of the nine scaling cases for the punctured interval
/// [t0 - 1/u, t0 + 1/u] \ {t0}. Cases {1,4}, {2,5}, {3,6} share outcome
/// facts, so the nine combinations yield six distinct outcomes.
struct ScalingCase {
    int case_id;                  // 1..9 from (magnitude of t0, magnitude of u)
    GalaxyRelation gal_relation;  // relation of the set to Gal(0)
    MagnitudeKind length_kind;    // size class of the length 2/u
    bool subset_of_monad;         // contained in monad(t0)

    bool same_outcome(const ScalingCase& o) const {
        return gal_relation == o.gal_relation && length_kind == o.length_kind &&
               subset_of_monad == o.subset_of_monad;
    }
};

/// Pre: u > 0. Case 8 resolves "may or may not intersect Gal(0)" exactly:
/// the interval reaches Gal(0) iff |t0| - 1/u is not positive infinitely
/// large (the boundary |t0| = 1/u counts as intersecting, the interval
/// being closed).
inline ScalingCase scaling_case(const Germ& t0, const Germ& u) {
    if (u.sign() <= 0) throw NonpositiveStep();
    Magnitude m0 = classify(t0);
    MagnitudeKind mt = m0.kind;
    MagnitudeKind mu = classify(u).kind;
    // A zero center sits in the "finite" row: the infinitesimal rows concern
    // nonzero infinitesimal centers.
    if (m0.sign == Sign::Zero) mt = MagnitudeKind::FiniteAppreciable;

    auto row = [](MagnitudeKind k) {
        switch (k) {
            case MagnitudeKind::FiniteAppreciable: return 0;
            case MagnitudeKind::Infinitesimal: return 1;
            case MagnitudeKind::InfinitelyLarge: return 2;
        }
        return 0;
    };
    auto col = [](MagnitudeKind k) {
        switch (k) {
            case MagnitudeKind::FiniteAppreciable: return 0;
            case MagnitudeKind::Infinitesimal: return 1;
            case MagnitudeKind::InfinitelyLarge: return 2;
        }
        return 0;
    };
    ScalingCase sc{};
    sc.case_id = 3 * row(mt) + col(mu) + 1;
    Germ half_len = u.inverse();
    sc.length_kind = classify(half_len).kind;
    sc.subset_of_monad = (mu == MagnitudeKind::InfinitelyLarge);

    if (mt != MagnitudeKind::InfinitelyLarge) {
        sc.gal_relation = (mu == MagnitudeKind::Infinitesimal)
                              ? GalaxyRelation::ContainsGalMinusPoint
                              : GalaxyRelation::Subset;
    } else if (mu == MagnitudeKind::Infinitesimal) {
        Germ abs_t0 = t0.sign() < 0 ? -t0 : t0;
        Germ gap = abs_t0 - half_len;
        bool reaches = !(gap.sign() > 0 && is_infinitely_large(gap));
        sc.gal_relation =
            reaches ? GalaxyRelation::IntersectsPartially : GalaxyRelation::Disjoint;
    } else {
        sc.gal_relation = GalaxyRelation::Disjoint;
    }
    return sc;
}

}  // namespace nonarch
