#pragma once

#include <string>
#include <vector>

#include "nonarch/magnitude.hpp"

namespace nonarch {

/// WW(t, u): the points reachable from t in finitely many steps of length
/// u > 0. Represented intensionally by (center, step); two values can denote
/// the same world, so comparison goes through ww_relation, not operator==.
struct WalkableWorld {
    Germ center;
    Germ step;

    WalkableWorld(Germ t, Germ u) : center(std::move(t)), step(std::move(u)) {
        if (step.sign() <= 0) throw NonpositiveStep();
    }

    std::string str() const { return "WW(" + center.str() + ", " + step.str() + ")"; }
};

enum class WWRelation { Equal, Disjoint, LeftInsideRight, RightInsideLeft };

inline const char* to_string(WWRelation r) {
    switch (r) {
        case WWRelation::Equal: return "equal";
        case WWRelation::Disjoint: return "disjoint";
        case WWRelation::LeftInsideRight: return "left-in-right";
        case WWRelation::RightInsideLeft: return "right-in-left";
    }
    return "";
}

/// s in WW(t, u) iff (s - t)/u is finite: any natural n beyond the standard
/// part of that quotient bounds the walk.
inline bool ww_member(const WalkableWorld& w, const Germ& s) {
    return is_finite((s - w.center) / w.step);
}

/// The order isomorphism WW(t,u) -> WW(0,1), s -> (s - t)/u.
/// Pre: ww_member(w, s); throws NotMember otherwise.
inline Germ ww_iso(const WalkableWorld& w, const Germ& s) {
    Germ q = (s - w.center) / w.step;
    if (!is_finite(q)) throw NotMember();
    return q;
}

/// Pairwise relation of two walkable worlds.
///
/// With d the center gap and M the larger step: the worlds are disjoint
/// when d/M is infinitely large; equal when the step ratio is finite both
/// ways (rescaling by a finite factor leaves a world unchanged); otherwise
/// the world whose step is infinitesimally smaller nests inside the other.
inline WWRelation ww_relation(const WalkableWorld& a, const WalkableWorld& b) {
    Germ d = a.center - b.center;
    const Germ& big = (a.step >= b.step) ? a.step : b.step;
    if (is_infinitely_large(d / big)) return WWRelation::Disjoint;
    Germ ratio = a.step / b.step;
    if (is_finite(ratio) && is_finite(ratio.inverse())) return WWRelation::Equal;
    return is_infinitesimal(ratio) ? WWRelation::LeftInsideRight : WWRelation::RightInsideLeft;
}

enum class StepSituation : int {
    BothInfinitesimal = 1,
    FiniteOverInfinitesimal = 2,
    BothFinite = 3,
    InfiniteOverInfinitesimal = 4,
    InfiniteOverFinite = 5,
    BothInfinite = 6,
};

/// The six size situations of two step lengths, larger first.
/// Pre: u >= v > 0.
inline StepSituation step_situation(const Germ& u, const Germ& v) {
    if (v.sign() <= 0 || u.sign() <= 0) throw NonpositiveStep();
    if (v > u) throw OrderViolation();
    MagnitudeKind mu = classify(u).kind;
    MagnitudeKind mv = classify(v).kind;
    switch (mu) {
        case MagnitudeKind::Infinitesimal:
            return StepSituation::BothInfinitesimal;
        case MagnitudeKind::FiniteAppreciable:
            return mv == MagnitudeKind::Infinitesimal ? StepSituation::FiniteOverInfinitesimal
                                                      : StepSituation::BothFinite;
        case MagnitudeKind::InfinitelyLarge:
            switch (mv) {
                case MagnitudeKind::Infinitesimal:
                    return StepSituation::InfiniteOverInfinitesimal;
                case MagnitudeKind::FiniteAppreciable:
                    return StepSituation::InfiniteOverFinite;
                case MagnitudeKind::InfinitelyLarge:
                    return StepSituation::BothInfinite;
            }
    }
    return StepSituation::BothFinite;  // unreachable
}

/// Deterministic probe points for membership-level validation of a world:
/// a few reachable multiples of the step, plus one point infinitely many
/// steps out and one infinitesimally close.
inline std::vector<Germ> probe_points(const WalkableWorld& w) {
    std::vector<Germ> pts;
    for (int k = -5; k <= 5; ++k)
        pts.push_back(w.center + Germ(ExactRational(k)) * w.step);
    Germ far = w.step * Germ::omega();
    Germ near = w.step * Germ::epsilon();
    pts.push_back(w.center + far);
    pts.push_back(w.center - far);
    pts.push_back(w.center + near);
    pts.push_back(w.center - near);
    return pts;
}

}  // namespace nonarch
