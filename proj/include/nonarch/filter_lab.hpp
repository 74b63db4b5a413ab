#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonarch/rational.hpp"

namespace nonarch {
namespace filter_lab {

/// Subsets of the index set {0, ..., k-1} as k-bit masks.
using Mask = std::uint32_t;

/// Vector in the power algebra Q^k.
using PowerVector = std::vector<ExactRational>;

constexpr int kMaxUniverse = 6;
constexpr int kMaxExhaustiveUniverse = 4;

inline Mask full_mask(int k) { return (Mask{1} << k) - 1; }

/// Zero set Z(x) = {lambda : x(lambda) = 0}.
inline Mask zero_set(const PowerVector& x) {
    Mask m = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].is_zero()) m |= Mask{1} << i;
    return m;
}

/// Filter on a finite universe: a family of subset masks satisfying the four
/// filter axioms (nonempty, excludes the empty set, intersection-closed,
/// upward closed).
struct FiniteFilter {
    int k = 0;
    std::vector<Mask> family;  // sorted, unique

    bool contains(Mask m) const {
        return std::binary_search(family.begin(), family.end(), m);
    }

    /// Determining set: the intersection of all members. Every filter on a
    /// finite universe is principal on this set.
    Mask determining_set() const {
        Mask t = full_mask(k);
        for (Mask m : family) t &= m;
        return t;
    }
};

/// Ideal of the power algebra, represented by its co-support T: the vectors
/// vanishing on T. Proper iff T is nonempty.
struct FiniteIdeal {
    int k = 0;
    Mask co_support = 0;

    bool contains(const PowerVector& x) const {
        return (zero_set(x) & co_support) == co_support;
    }

    bool is_proper() const { return co_support != 0; }
    bool is_maximal() const { return std::popcount(co_support) == 1; }
};

inline bool satisfies_filter_axioms(int k, const std::vector<Mask>& family) {
    if (family.empty()) return false;
    const Mask full = full_mask(k);
    auto in = [&](Mask m) { return std::find(family.begin(), family.end(), m) != family.end(); };
    for (Mask a : family) {
        if (a == 0) return false;  // excludes the empty set
        for (Mask b : family)
            if (!in(a & b)) return false;  // intersection closed
        for (Mask s = a; s <= full; s = (s + 1) | a)
            if (!in(s)) return false;  // upward closed (s ranges over supersets of a)
    }
    return true;
}

/// Principal filter on a nonempty set T: all supersets of T.
inline FiniteFilter principal_filter(int k, Mask t) {
    FiniteFilter f{k, {}};
    const Mask full = full_mask(k);
    for (Mask s = t; ; s = (s + 1) | t) {
        f.family.push_back(s);
        if (s == full) break;
    }
    std::sort(f.family.begin(), f.family.end());
    return f;
}

/// All filters on {0,...,k-1}. For k <= 4 every one of the 2^(2^k - 1)
/// candidate families of nonempty subsets is tested against the axioms by
/// brute force; for k = 5, 6 the principal filters are constructed directly.
inline std::vector<FiniteFilter> enumerate_filters(int k) {
    if (k < 1 || k > kMaxUniverse) throw UniverseTooLarge(k);
    std::vector<FiniteFilter> out;
    const Mask full = full_mask(k);
    if (k <= kMaxExhaustiveUniverse) {
        const int subsets = static_cast<int>(full);  // nonempty subsets: masks 1..full
        const std::uint64_t candidates = std::uint64_t{1} << subsets;
        for (std::uint64_t bits = 0; bits < candidates; ++bits) {
            std::vector<Mask> family;
            for (int i = 0; i < subsets; ++i)
                if (bits >> i & 1) family.push_back(static_cast<Mask>(i + 1));
            if (satisfies_filter_axioms(k, family)) {
                std::sort(family.begin(), family.end());
                out.push_back(FiniteFilter{k, std::move(family)});
            }
        }
    } else {
        for (Mask t = 1; t <= full; ++t) out.push_back(principal_filter(k, t));
    }
    return out;
}

/// Ultrafilter condition: for every subset, it or its complement belongs.
inline bool is_ultrafilter(const FiniteFilter& f) {
    const Mask full = full_mask(f.k);
    for (Mask m = 0; m <= full; ++m)
        if (!f.contains(m) && !f.contains(full & ~m)) return false;
    return true;
}

inline FiniteIdeal filter_to_ideal(const FiniteFilter& f) {
    return FiniteIdeal{f.k, f.determining_set()};
}

inline FiniteFilter ideal_to_filter(const FiniteIdeal& i) {
    return principal_filter(i.k, i.co_support);
}

/// Semantic ideal membership: x belongs to the ideal of the filter iff its
/// zero set is a member of the filter. Used to validate the co-support
/// representation rather than assume it.
inline bool in_filter_ideal(const FiniteFilter& f, const PowerVector& x) {
    return f.contains(zero_set(x));
}

enum class OrderKind { Total, Partial };

/// Shape of the reduced power algebra Q^k / I_F.
struct QuotientInfo {
    int dim = 0;
    bool is_field = false;
    OrderKind order = OrderKind::Partial;
    // For a properly partial order, indicator vectors of an incomparable pair.
    std::optional<std::pair<PowerVector, PowerVector>> incomparable;
};

inline PowerVector indicator(int k, Mask m) {
    PowerVector v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        if (m >> i & 1) v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline QuotientInfo quotient(const FiniteFilter& f) {
    QuotientInfo q;
    const Mask t = f.determining_set();
    q.dim = std::popcount(t);
    q.is_field = q.dim == 1;
    q.order = q.dim == 1 ? OrderKind::Total : OrderKind::Partial;
    if (q.dim > 1) {
        // Split the determining set; the two indicator classes are incomparable.
        Mask lo = t & static_cast<Mask>(-static_cast<std::int32_t>(t));  // lowest bit
        q.incomparable = {indicator(f.k, lo), indicator(f.k, t & ~lo)};
    }
    return q;
}

/// Order and equality of quotient classes, decided by filter membership of
/// the pointwise comparison sets.
inline bool class_leq(const FiniteFilter& f, const PowerVector& x, const PowerVector& y) {
    Mask m = 0;
    for (int i = 0; i < f.k; ++i)
        if (x[static_cast<std::size_t>(i)] <= y[static_cast<std::size_t>(i)]) m |= Mask{1} << i;
    return f.contains(m);
}

inline bool class_eq(const FiniteFilter& f, const PowerVector& x, const PowerVector& y) {
    Mask m = 0;
    for (int i = 0; i < f.k; ++i)
        if (x[static_cast<std::size_t>(i)] == y[static_cast<std::size_t>(i)]) m |= Mask{1} << i;
    return f.contains(m);
}

struct OrderReport {
    bool ok = true;                       // no axiom violations
    std::vector<std::string> violations;  // each with a witness
    std::vector<std::pair<PowerVector, PowerVector>> incomparable_pairs;
};

inline std::string vec_str(const PowerVector& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += x[i].str();
    }
    return s + ")";
}

inline PowerVector vec_add(const PowerVector& x, const PowerVector& y) {
    PowerVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

inline PowerVector vec_mul(const PowerVector& x, const PowerVector& y) {
    PowerVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * y[i];
    return r;
}

/// Checks the partial-order axioms and their compatibility with the algebra
/// structure over all pairs and triples drawn from the sample.
inline OrderReport quotient_order_check(const FiniteFilter& f,
                                        const std::vector<PowerVector>& sample) {
    OrderReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(msg);
    };
    const PowerVector zero(static_cast<std::size_t>(f.k));
    for (const auto& x : sample) {
        if (!class_leq(f, x, x)) fail("reflexivity: " + vec_str(x));
        for (const auto& y : sample) {
            bool xy = class_leq(f, x, y);
            bool yx = class_leq(f, y, x);
            if (!xy && !yx) rep.incomparable_pairs.emplace_back(x, y);
            if (xy && yx && !class_eq(f, x, y))
                fail("antisymmetry: " + vec_str(x) + " vs " + vec_str(y));
            for (const auto& z : sample) {
                if (xy && class_leq(f, y, z) && !class_leq(f, x, z))
                    fail("transitivity: " + vec_str(x) + " " + vec_str(y) + " " + vec_str(z));
                if (xy && !class_leq(f, vec_add(x, z), vec_add(y, z)))
                    fail("translation invariance: " + vec_str(x) + " " + vec_str(y) + " + " +
                         vec_str(z));
                if (xy && class_leq(f, zero, z) && !class_leq(f, vec_mul(x, z), vec_mul(y, z)))
                    fail("multiplication monotonicity: " + vec_str(x) + " " + vec_str(y) + " * " +
                         vec_str(z));
            }
        }
    }
    return rep;
}

inline PowerVector constant_vector(int k, const ExactRational& r) {
    return PowerVector(static_cast<std::size_t>(k), r);
}

/// The map r -> class of the constant vector is an injective ring
/// homomorphism: constants land in the ideal only at r = 0, and the class
/// operations agree with rational arithmetic.
inline bool embedding_injectivity_check(const FiniteFilter& f) {
    for (long long n = -3; n <= 5; ++n) {
        ExactRational r{BigInt(n), BigInt(7)};
        bool in_ideal = in_filter_ideal(f, constant_vector(f.k, r));
        if (in_ideal != r.is_zero()) return false;
    }
    const ExactRational a{2}, b{3};
    PowerVector ua = constant_vector(f.k, a), ub = constant_vector(f.k, b);
    if (!class_eq(f, vec_mul(ua, ub), constant_vector(f.k, a * b))) return false;
    if (!class_eq(f, vec_add(ua, ub), constant_vector(f.k, a + b))) return false;
    return true;
}

}  // namespace filter_lab
}  // namespace nonarch
