#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fer/errors.hpp"

namespace fer {

//
// Neron-Severi lattice of the Hirzebruch surface F_e blown up at r points
// p_1..p_r (classes H = pullback of the negative section C_e, F = pullback
// of a fiber, E_1..E_r exceptional), optionally blown up once more at an
// extra very-general point x (class E_x).
//
// Pairing: H^2 = -e, F^2 = 0, H.F = 1, E_i^2 = E_x^2 = -1, and all other
// products of basis classes vanish.
//
// SIGN CONVENTION (fixed once, here): DivClass stores the multiplicity
// vector m with the meaning
//
//     cls = a*H + b*F - sum_i m[i]*E_i - mx*E_x,
//
// i.e. positive m[i] means E_i is subtracted. The canonical class
// K = -2H - (e+2)F + sum E_i + E_x is therefore stored with m[i] = -1.
// Use exceptional_coeff() when the actual coefficient of E_i is wanted;
// do not negate by hand.
//

// How the blown-up points sit on F_e. VeryGeneral means "outside every
// countable union of proper closed subsets" and in particular: off C_e,
// pairwise distinct fibers. Configured pins each point's incidences.
struct PointConfig {
    enum class Kind { VeryGeneral, Configured };

    Kind kind = Kind::VeryGeneral;
    std::vector<bool> on_ce;     // Configured only, size r
    std::vector<int> fiber_id;   // Configured only, size r

    static PointConfig very_general() { return PointConfig{}; }
    static PointConfig configured(std::vector<bool> on_ce, std::vector<int> fiber_id) {
        PointConfig c;
        c.kind = Kind::Configured;
        c.on_ce = std::move(on_ce);
        c.fiber_id = std::move(fiber_id);
        return c;
    }

    bool is_very_general() const { return kind == Kind::VeryGeneral; }

    bool operator==(const PointConfig&) const = default;
};

struct SurfaceModel {
    long long e = 0;   // Hirzebruch invariant, >= 0
    int r = 0;         // number of blown-up points, >= 0
    bool with_x = false;
    PointConfig config = PointConfig::very_general();

    SurfaceModel() = default;
    SurfaceModel(long long e_, int r_, bool with_x_ = false,
                 PointConfig cfg = PointConfig::very_general())
        : e(e_), r(r_), with_x(with_x_), config(std::move(cfg)) {
        validate();
    }

    void validate() const;

    // Rank of the exceptional part (r, plus one when x is blown up).
    int exceptional_rank() const { return r + (with_x ? 1 : 0); }
    int picard_rank() const { return 2 + exceptional_rank(); }

    // True when the points are pairwise on distinct fibers and off C_e
    // (either very general, or explicitly configured that way). This is the
    // hypothesis of the closed-form ampleness and Seshadri statements.
    bool points_generic() const;

    // Adjoin the extra very-general point x.
    SurfaceModel blown_up_at_x() const;

    bool operator==(const SurfaceModel&) const = default;
};

struct DivClass {
    long long a = 0;
    long long b = 0;
    std::vector<long long> m;  // length r; positive entry means -m_i E_i
    bool has_x = false;
    long long mx = 0;

    DivClass() = default;
    DivClass(long long a_, long long b_, std::vector<long long> m_ = {})
        : a(a_), b(b_), m(std::move(m_)) {}
    DivClass(long long a_, long long b_, std::vector<long long> m_, long long mx_)
        : a(a_), b(b_), m(std::move(m_)), has_x(true), mx(mx_) {}

    static DivClass zero(const SurfaceModel& S);
    // Basis classes on S (E_x requires S.with_x).
    static DivClass H(const SurfaceModel& S);
    static DivClass F(const SurfaceModel& S);
    static DivClass E(const SurfaceModel& S, int i);  // i in [0, r)
    static DivClass Ex(const SurfaceModel& S);

    bool belongs_to(const SurfaceModel& S) const {
        return static_cast<int>(m.size()) == S.r && has_x == S.with_x;
    }

    // Coefficient of E_i in the class (note the sign convention above).
    long long exceptional_coeff(int i) const { return -m.at(static_cast<size_t>(i)); }

    // Drop the E_x coordinate (class pushed down to F_{e,r}).
    DivClass without_x() const;
    // Adjoin an E_x coordinate with multiplicity k.
    DivClass with_x_mult(long long k) const;

    DivClass operator+(const DivClass& o) const;
    DivClass operator-(const DivClass& o) const;
    DivClass operator-() const;
    DivClass operator*(long long k) const;

    bool operator==(const DivClass&) const = default;
    // Lexicographic by (a, b, m, mx); ties between with/without x never
    // arise inside one surface.
    std::strong_ordering operator<=>(const DivClass& o) const;

    std::string str() const;  // "a,b,m1,...,mr[,mx]"
};

// Exact intersection pairing. Bilinear, symmetric; throws StructuralError on
// shape mismatch and ArgumentError if inputs exceed the overflow-safe range
// (|coefficients| <= 2^40, e <= 2^20, r <= 64 — products are accumulated in
// 128 bits, so nothing can wrap inside that box).
long long intersect(const DivClass& d1, const DivClass& d2, const SurfaceModel& S);

// K = -2H - (e+2)F + sum E_i (+ E_x), stored per the sign convention.
DivClass canonical_class(const SurfaceModel& S);

long long self_intersection(const DivClass& d, const SurfaceModel& S);
long long k_degree(const DivClass& d, const SurfaceModel& S);  // K.D

// 1 + (D^2 + K.D)/2; throws InvariantError if the numerator is odd.
long long arithmetic_genus(const DivClass& d, const SurfaceModel& S);

// (D^2 - K.D)/2. Strict lower bound for h^0 when h^2 = 0, which holds for
// every class this library feeds it (effective classes with b >= 0 on a
// rational surface); callers interpret.
long long riemann_roch_term(const DivClass& d, const SurfaceModel& S);

} // namespace fer
