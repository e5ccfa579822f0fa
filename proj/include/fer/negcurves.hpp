#pragma once

#include <vector>

#include "fer/lattice.hpp"

namespace fer {

//
// Lattice classes D = alpha*H + beta*F - sum n_i E_i - n_x E_x solving
//
//     D^2 = -1, K.D = -1   ("minus-one" classes), or
//     D^2 = -2, K.D =  0   ("minus-two" classes),
//
// enumerated exactly, with the necessary conditions for such a class to be
// an irreducible curve through (very) general points recorded as verdicts.
//

enum class NegKind { MinusOne, MinusTwo };

struct NegCurveClass {
    DivClass cls;
    NegKind kind = NegKind::MinusOne;
    bool passes_irreducibility = false;  // structural_filter
    bool passes_very_general = false;    // xu_filter (advisory, never fatal)
    bool passes_effectivity = false;     // effectivity_heuristic
};

struct EnumBounds {
    enum class Derivation { Auto, Manual };

    Derivation derivation = Derivation::Auto;
    long long a_max = 0;
    long long b_max = 0;
    long long m_max = 0;

    static EnumBounds automatic() { return EnumBounds{}; }
    static EnumBounds manual(long long a_max, long long b_max, long long m_max) {
        if (a_max < 0 || b_max < 0 || m_max < 0)
            throw ArgumentError("enumeration bounds must be >= 0");
        if (a_max > 1'000'000 || b_max > 1'000'000 || m_max > 1'000'000)
            throw ArgumentError("enumeration bounds exceed the supported range");
        return EnumBounds{Derivation::Manual, a_max, b_max, m_max};
    }
};

// Coefficient boxes that provably contain every solution of both systems.
// Requires K^2 > 0: write D = (K.D / K^2) K + P with P in the K-orthogonal
// complement, which is negative definite by the Hodge index theorem; the
// systems then pin -P^2, and Cauchy-Schwarz in K-perp bounds every
// coordinate functional. Throws BoundsError when K^2 <= 0 (supply manual
// bounds in that case).
EnumBounds derive_auto_bounds(const SurfaceModel& S);

// All solutions of the two systems within bounds, deduplicated, in
// lexicographic (kind, a, b, m, mx) order, with filter verdicts attached.
std::vector<NegCurveClass> enumerate_neg_classes(const SurfaceModel& S,
                                                 const EnumBounds& bounds);

// Necessary conditions for the class to be a reduced irreducible curve:
// alpha >= 0; alpha = 0 forces beta in {0, 1}; beta = 0 forces alpha in
// {0, 1}; alpha >= 1 forces beta = 0 or beta >= alpha*e; in the latter
// range no multiplicity may exceed alpha; and multiplicities are
// non-negative except for the pure exceptional patterns E_i, E_x, E_i - E_x.
bool structural_filter(const DivClass& cls, const SurfaceModel& S);

// Multi-point positivity constraint for an irreducible curve through very
// general points: the image curve alpha*C_e + beta*f must satisfy
// C^2 >= (sum of squared multiplicities) - (least positive multiplicity),
// equivalently D^2 >= -min_pos. Classes with no positive multiplicity pass
// vacuously. Recorded as a flag only: candidate classes may be reducible.
bool xu_filter(const DivClass& cls, const SurfaceModel& S);

// Conditions-counting effectivity test at (very) general points:
// h^0(alpha, beta) must exceed the number of imposed conditions. Pure
// exceptional patterns are decided by a table (E_i, E_x effective;
// E_i - E_x and friends not). For configured points, classes of fiber type
// are matched against the fiber groups instead.
bool effectivity_heuristic(const DivClass& cls, const SurfaceModel& S);

// The through-x candidate subset of the enumeration: alpha >= 0,
// beta >= alpha*e, n_x >= 1. Requires S.with_x.
std::vector<NegCurveClass> through_x_candidates(const SurfaceModel& S,
                                                const EnumBounds& bounds);

// Classes grouped by (a, b, n_x, multiplicity pattern); the pattern is the
// multiset of m-entries, descending. Groups come back ordered by key.
struct ClassFamily {
    long long a = 0;
    long long b = 0;
    long long mx = 0;
    std::vector<long long> pattern;  // sorted descending
    NegKind kind = NegKind::MinusOne;
    std::vector<DivClass> members;
};

std::vector<ClassFamily> group_families(const std::vector<NegCurveClass>& classes);

} // namespace fer
