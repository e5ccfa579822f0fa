#pragma once

#include <string>
#include <vector>

#include "fer/negcurves.hpp"

namespace fer {

//
// Nefness and ampleness against the finite curve list that controls the
// effective cone of an anticanonical rational surface: negative classes,
// candidate fixed components of |-K|, and -K itself.
//

struct FixedComponent {
    DivClass cls;
    bool definite = false;  // provably a fixed component of |-K|
    std::string label;      // "Ce", "fiber", "exceptional"
};

struct FixedComponentSet {
    std::vector<FixedComponent> items;
    // The containment statement is proved for r <= e+1; beyond that the
    // same superset is returned but flagged.
    bool beyond_lemma_range = false;
};

// Candidate fixed components of |-K|: the strict transform of C_e (definite
// when e >= 3), each fiber through blown-up points (definite when it carries
// k > 2 of them, or k > 1 if e >= 3), every E_i, and E_x when present.
FixedComponentSet fixed_components(const SurfaceModel& S);

struct ConeGenerators {
    // Enumerated negative classes that pass the irreducibility and
    // effectivity gates, i.e. the candidate negative curves.
    std::vector<NegCurveClass> negatives;
    std::vector<DivClass> fixed;        // fixed-component superset
    std::vector<DivClass> extra_curves; // F always; H too when e = 0 (the
                                        // cone description needs rank >= 3,
                                        // the rulings cover the small cases)
    DivClass anticanonical;
    EnumBounds bounds_used;

    // Deduplicated, lexicographically sorted list of every class the
    // positivity tests pair against (includes the anticanonical class).
    std::vector<DivClass> test_classes() const;
};

ConeGenerators build_cone_generators(const SurfaceModel& S,
                                     const EnumBounds& bounds = EnumBounds::automatic());

struct PositivityVerdict {
    bool verdict = false;
    DivClass witness;        // generator achieving the minimal pairing
    long long min_pairing = 0;
    long long self_int = 0;  // filled by the ampleness check
};

// D is nef iff it pairs >= 0 with every test class. Exact only if the
// negative list is complete, which auto bounds guarantee for the
// enumerated (-1)/(-2) part; requires the anticanonical range
// r + with_x <= e + 5.
PositivityVerdict is_nef_verdict(const DivClass& D, const SurfaceModel& S,
                                 const ConeGenerators& G);
bool is_nef(const DivClass& D, const SurfaceModel& S, const ConeGenerators& G);

// Closed-form ampleness on F_{e,r} with 1 <= r <= e+1 points off C_e on
// pairwise distinct fibers: a > m_i > 0 for all i, b > ae, and
// b > m_1 + ... + m_r. Outside those hypotheses throws
// UnsupportedRangeError (fall back to nakai_check).
bool is_ample_closed_form(const DivClass& L, const SurfaceModel& S);

// Nakai-Moishezon against the generator list: L^2 > 0 and L.C > 0 for every
// test class. Serves as the oracle for is_ample_closed_form.
PositivityVerdict nakai_verdict(const DivClass& L, const SurfaceModel& S,
                                const ConeGenerators& G);
bool nakai_check(const DivClass& L, const SurfaceModel& S, const ConeGenerators& G);

} // namespace fer
