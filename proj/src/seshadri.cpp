#include "fer/seshadri.hpp"

#include <algorithm>
#include <set>

#include "fer/cohomology.hpp"

namespace fer {

namespace {

struct Candidate {
    Rational ratio;
    DivClass witness;
    long long mult;
};

// Minimal ratio; ties by lexicographically smallest witness, then mult.
Candidate pick_min(const std::vector<Candidate>& cands) {
    const Candidate* best = nullptr;
    for (const auto& c : cands) {
        if (!best || c.ratio < best->ratio ||
            (c.ratio == best->ratio &&
             (c.witness < best->witness ||
              (c.witness == best->witness && c.mult < best->mult))))
            best = &c;
    }
    return *best;
}

void require_small_r_setup(const DivClass& L, const SurfaceModel& S) {
    if (S.e <= 0) throw UnsupportedRangeError("closed form needs e > 0");
    if (S.r > S.e - 1)
        throw UnsupportedRangeError("closed form needs r <= e - 1");
    if (S.with_x) throw UnsupportedRangeError("closed form is stated on F_{e,r}");
    if (!S.points_generic())
        throw UnsupportedRangeError("points must avoid C_e and lie on distinct fibers");
    bool ample = S.r == 0 ? (L.a > 0 && L.b > L.a * S.e) : is_ample_closed_form(L, S);
    if (!ample) throw UnsupportedRangeError("L must be ample");
}

} // namespace

const char* seshadri_method_name(SeshadriMethod m) {
    switch (m) {
        case SeshadriMethod::ClosedFormFe: return "closed_form_fe";
        case SeshadriMethod::ClosedFormSmallR: return "closed_form_small_r";
        case SeshadriMethod::ClosedFormRe: return "closed_form_r_e";
        case SeshadriMethod::Enumerative: return "enumerative";
    }
    return "unknown";
}

SeshadriResult seshadri_fe(long long a, long long b, long long e, bool on_ce) {
    if (e < 0) throw ArgumentError("e must be >= 0");
    SurfaceModel S(e, 0);
    bool ample = e == 0 ? (a > 0 && b > 0) : (a > 0 && b > a * e);
    if (!ample) throw ArgumentError("a C_e + b f is not ample");

    std::vector<Candidate> cands;
    if (e == 0) {
        cands.push_back({make_rational(a, 1), DivClass::F(S), 1});
        cands.push_back({make_rational(b, 1), DivClass::H(S), 1});
    } else if (on_ce) {
        cands.push_back({make_rational(a, 1), DivClass::F(S), 1});
        cands.push_back({make_rational(b - a * e, 1), DivClass::H(S), 1});
    } else {
        cands.push_back({make_rational(a, 1), DivClass::F(S), 1});
    }
    Candidate best = pick_min(cands);
    return {best.ratio, best.witness, best.mult, SeshadriMethod::ClosedFormFe, true, {}};
}

SeshadriResult seshadri_small_r(const DivClass& L, const SurfaceModel& S, const XPosition& x) {
    S.validate();
    if (!L.belongs_to(S)) throw StructuralError("class does not belong to the surface");
    require_small_r_setup(L, S);

    auto point_index = [&](int i) {
        if (i < 0 || i >= S.r) throw ArgumentError("point index out of range");
        return static_cast<size_t>(i);
    };

    std::vector<Candidate> cands;
    switch (x.kind) {
        case XPosition::Kind::Generic:
            // Fiber through x; it meets no p_i.
            cands.push_back({make_rational(L.a, 1), DivClass::F(S), 1});
            break;
        case XPosition::Kind::OnFiber: {
            size_t i = point_index(x.index);
            DivClass fi = DivClass::F(S);
            fi.m[i] = 1;
            cands.push_back({make_rational(L.a - L.m[i], 1), fi, 1});
            break;
        }
        case XPosition::Kind::OnCeAndFiber: {
            size_t i = point_index(x.index);
            DivClass fi = DivClass::F(S);
            fi.m[i] = 1;
            cands.push_back({make_rational(L.b - L.a * S.e, 1), DivClass::H(S), 1});
            cands.push_back({make_rational(L.a - L.m[i], 1), fi, 1});
            break;
        }
        case XPosition::Kind::OnFiberAndExc: {
            size_t i = point_index(x.index);
            DivClass fi = DivClass::F(S);
            fi.m[i] = 1;
            cands.push_back({make_rational(L.m[i], 1), DivClass::E(S, x.index), 1});
            cands.push_back({make_rational(L.a - L.m[i], 1), fi, 1});
            break;
        }
        case XPosition::Kind::OnCe:
            cands.push_back({make_rational(L.a, 1), DivClass::F(S), 1});
            cands.push_back({make_rational(L.b - L.a * S.e, 1), DivClass::H(S), 1});
            break;
        case XPosition::Kind::OnExc: {
            size_t i = point_index(x.index);
            cands.push_back({make_rational(L.m[i], 1), DivClass::E(S, x.index), 1});
            break;
        }
    }
    Candidate best = pick_min(cands);
    return {best.ratio, best.witness, best.mult, SeshadriMethod::ClosedFormSmallR, true, {}};
}

SeshadriResult seshadri_r_e(const DivClass& L, const SurfaceModel& S) {
    S.validate();
    if (!L.belongs_to(S)) throw StructuralError("class does not belong to the surface");
    if (S.e <= 0) throw UnsupportedRangeError("closed form needs e > 0");
    if (S.r != S.e && S.r != S.e + 1)
        throw UnsupportedRangeError("closed form needs r = e or r = e + 1");
    if (S.with_x) throw UnsupportedRangeError("closed form is stated on F_{e,r}");
    if (!S.config.is_very_general())
        throw UnsupportedRangeError("closed form needs very general points");
    if (!is_ample_closed_form(L, S)) throw UnsupportedRangeError("L must be ample");

    // Indices of the e largest multiplicities, lowest index first on ties.
    std::vector<int> order(static_cast<size_t>(S.r));
    for (int i = 0; i < S.r; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return L.m[static_cast<size_t>(i)] > L.m[static_cast<size_t>(j)];
    });
    DivClass w(1, S.e, std::vector<long long>(static_cast<size_t>(S.r), 0));
    long long sum = 0;
    for (long long t = 0; t < S.e; ++t) {
        int i = order[static_cast<size_t>(t)];
        w.m[static_cast<size_t>(i)] = 1;
        sum += L.m[static_cast<size_t>(i)];
    }

    std::vector<Candidate> cands;
    cands.push_back({make_rational(L.a, 1), DivClass::F(S), 1});
    cands.push_back({make_rational(L.b - sum, 1), w, 1});
    Candidate best = pick_min(cands);
    return {best.ratio, best.witness, best.mult, SeshadriMethod::ClosedFormRe, true, {}};
}

SeshadriResult seshadri_enumerative(const DivClass& L, const SurfaceModel& S,
                                    const EnumBounds& bounds) {
    S.validate();
    if (!L.belongs_to(S)) throw StructuralError("class does not belong to the surface");
    if (S.with_x)
        throw UnsupportedRangeError("the engine blows up x itself; pass the surface without x");
    if (!S.config.is_very_general())
        throw UnsupportedRangeError("the engine models very general points only");
    if (S.r + 1 > S.e + 5)
        throw UnsupportedRangeError(
            "blowing up x leaves the anticanonical range (needs r + 1 <= e + 5)");

    ConeGenerators G = build_cone_generators(S, bounds);
    if (!nakai_check(L, S, G)) throw ArgumentError("L is not ample");

    SurfaceModel Sx = S.blown_up_at_x();
    EnumBounds bx =
        bounds.derivation == EnumBounds::Derivation::Auto ? derive_auto_bounds(Sx) : bounds;

    std::set<std::pair<DivClass, long long>> pairs;
    for (const auto& nc : through_x_candidates(Sx, bx)) {
        if (!nc.passes_irreducibility || !nc.passes_effectivity) continue;
        pairs.emplace(nc.cls.without_x(), nc.cls.mx);
    }
    for (const auto& fc : fixed_components(S).items) {
        if (effectivity_heuristic(fc.cls.with_x_mult(1), Sx)) pairs.emplace(fc.cls, 1);
    }
    DivClass antican = -canonical_class(S);
    for (long long nx = 1; nx <= 2; ++nx) {
        if (effectivity_heuristic(antican.with_x_mult(nx), Sx)) pairs.emplace(antican, nx);
    }
    if (pairs.empty())
        throw BoundsError("empty Seshadri candidate set; enumeration bounds are too small");

    std::vector<Candidate> cands;
    cands.reserve(pairs.size());
    for (const auto& [base, nx] : pairs)
        cands.push_back({make_rational(intersect(L, base, S), nx), base, nx});
    Candidate best = pick_min(cands);

    SeshadriResult res;
    res.value = best.ratio;
    res.witness = best.witness;
    res.witness_mult = best.mult;
    res.method = SeshadriMethod::Enumerative;
    res.certified =
        S.r <= S.e + 1 && bounds.derivation == EnumBounds::Derivation::Auto;
    res.bounds_used = bx;
    return res;
}

} // namespace fer
