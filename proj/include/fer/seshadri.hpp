#pragma once

#include "fer/positivity.hpp"
#include "fer/rational.hpp"

namespace fer {

//
// Seshadri constants eps(L; x) = inf L.C / mult_x(C) over irreducible curves
// through x. Closed forms cover F_e, F_{e,r} with r <= e-1 (any x, suitably
// configured points) and r in {e, e+1} (very general x); the enumerative
// engine minimizes over the finite candidate set of negative classes through
// x, fixed components, and anticanonical members, with x modeled by
// adjoining E_x — no coordinates are ever chosen.
//

// Where x sits relative to the distinguished curves. The six variants are
// mutually exclusive for points off C_e on pairwise distinct fibers.
struct XPosition {
    enum class Kind { Generic, OnFiber, OnCe, OnCeAndFiber, OnFiberAndExc, OnExc };

    Kind kind = Kind::Generic;
    int index = -1;  // 0-based point index for the fiber/exceptional variants

    static XPosition generic() { return {Kind::Generic, -1}; }
    static XPosition on_fiber(int i) { return {Kind::OnFiber, i}; }
    static XPosition on_ce() { return {Kind::OnCe, -1}; }
    static XPosition on_ce_and_fiber(int i) { return {Kind::OnCeAndFiber, i}; }
    static XPosition on_fiber_and_exc(int i) { return {Kind::OnFiberAndExc, i}; }
    static XPosition on_exc(int i) { return {Kind::OnExc, i}; }
};

enum class SeshadriMethod { ClosedFormFe, ClosedFormSmallR, ClosedFormRe, Enumerative };

const char* seshadri_method_name(SeshadriMethod m);

struct SeshadriResult {
    Rational value;
    DivClass witness;        // class of a Seshadri curve
    long long witness_mult = 1;
    SeshadriMethod method = SeshadriMethod::Enumerative;
    // True when the candidate set is provably complete (closed forms, or
    // the enumerative engine inside its proven range with auto bounds).
    bool certified = true;
    EnumBounds bounds_used;  // meaningful for the enumerative engine
};

// F_e itself: min(a, b) when e = 0; for e >= 1, min(a, b - ae) on C_e and a
// off it. L = a C_e + b f must be ample (a > 0 and b > ae; b > 0 when e = 0).
SeshadriResult seshadri_fe(long long a, long long b, long long e, bool on_ce);

// r <= e-1 points off C_e on distinct fibers, L ample, x anywhere; the six
// mutually exclusive positions give a, a - m_i, min(b-ae, a-m_i),
// min(m_i, a-m_i), min(a, b-ae), m_i respectively.
SeshadriResult seshadri_small_r(const DivClass& L, const SurfaceModel& S, const XPosition& x);

// r = e or e+1 very general points, very general x:
// min(a, b - sum of the e largest multiplicities).
SeshadriResult seshadri_r_e(const DivClass& L, const SurfaceModel& S);

// General engine: exact minimum of L.C / n_x over the candidate set built
// from (a) enumerated negative classes through x passing the
// irreducibility and effectivity gates, (b) fixed components through x,
// (c) anticanonical members with n_x in {1, 2}. Requires very general
// points, r + 1 <= e + 5, and L ample (checked through nakai). For
// r >= e+2 the result is an upper bound certified only up to the recorded
// bounds and heuristics; the certified flag says so.
SeshadriResult seshadri_enumerative(const DivClass& L, const SurfaceModel& S,
                                    const EnumBounds& bounds = EnumBounds::automatic());

} // namespace fer
