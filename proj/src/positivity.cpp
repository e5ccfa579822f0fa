#include "fer/positivity.hpp"

#include <algorithm>
#include <map>

namespace fer {

namespace {

void require_anticanonical_range(const SurfaceModel& S) {
    if (S.exceptional_rank() > S.e + 5)
        throw UnsupportedRangeError(
            "surface is outside the anticanonical range (needs r + with_x <= e + 5)");
}

PositivityVerdict pair_against(const DivClass& D, const SurfaceModel& S,
                               const std::vector<DivClass>& tests, bool strict) {
    PositivityVerdict v;
    v.verdict = true;
    bool first = true;
    for (const DivClass& C : tests) {
        long long p = intersect(D, C, S);
        if (first || p < v.min_pairing || (p == v.min_pairing && C < v.witness)) {
            v.min_pairing = p;
            v.witness = C;
            first = false;
        }
        if (strict ? p <= 0 : p < 0) v.verdict = false;
    }
    return v;
}

} // namespace

FixedComponentSet fixed_components(const SurfaceModel& S) {
    S.validate();
    FixedComponentSet set;
    set.beyond_lemma_range = S.r > S.e + 1;

    DivClass ce = DivClass::H(S);
    if (!S.config.is_very_general()) {
        for (int i = 0; i < S.r; ++i)
            if (S.config.on_ce[static_cast<size_t>(i)]) ce.m[static_cast<size_t>(i)] = 1;
    }
    set.items.push_back({ce, S.e >= 3, "Ce"});

    // Fibers through blown-up points, grouped by fiber.
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < S.r; ++i) {
        int id = S.config.is_very_general() ? i : S.config.fiber_id[static_cast<size_t>(i)];
        groups[id].push_back(i);
    }
    for (const auto& [id, pts] : groups) {
        DivClass f = DivClass::F(S);
        for (int i : pts) f.m[static_cast<size_t>(i)] = 1;
        long long k = static_cast<long long>(pts.size());
        bool definite = k > 2 || (S.e >= 3 && k > 1);
        set.items.push_back({f, definite, "fiber"});
    }

    for (int i = 0; i < S.r; ++i)
        set.items.push_back({DivClass::E(S, i), false, "exceptional"});
    if (S.with_x) set.items.push_back({DivClass::Ex(S), false, "exceptional"});
    return set;
}

std::vector<DivClass> ConeGenerators::test_classes() const {
    std::vector<DivClass> all;
    for (const auto& nc : negatives) all.push_back(nc.cls);
    all.insert(all.end(), fixed.begin(), fixed.end());
    all.insert(all.end(), extra_curves.begin(), extra_curves.end());
    all.push_back(anticanonical);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

ConeGenerators build_cone_generators(const SurfaceModel& S, const EnumBounds& bounds) {
    S.validate();
    ConeGenerators G;
    G.bounds_used =
        bounds.derivation == EnumBounds::Derivation::Auto ? derive_auto_bounds(S) : bounds;
    for (const auto& nc : enumerate_neg_classes(S, G.bounds_used)) {
        if (nc.passes_irreducibility && nc.passes_effectivity) G.negatives.push_back(nc);
    }
    for (const auto& fc : fixed_components(S).items) G.fixed.push_back(fc.cls);
    G.extra_curves.push_back(DivClass::F(S));
    if (S.e == 0) G.extra_curves.push_back(DivClass::H(S));
    G.anticanonical = -canonical_class(S);
    return G;
}

PositivityVerdict is_nef_verdict(const DivClass& D, const SurfaceModel& S,
                                 const ConeGenerators& G) {
    require_anticanonical_range(S);
    if (!D.belongs_to(S)) throw StructuralError("class does not belong to the surface");
    return pair_against(D, S, G.test_classes(), /*strict=*/false);
}

bool is_nef(const DivClass& D, const SurfaceModel& S, const ConeGenerators& G) {
    return is_nef_verdict(D, S, G).verdict;
}

bool is_ample_closed_form(const DivClass& L, const SurfaceModel& S) {
    S.validate();
    if (S.e <= 0)
        throw UnsupportedRangeError("closed-form ampleness needs e > 0");
    if (S.r < 1 || S.r > S.e + 1)
        throw UnsupportedRangeError("closed-form ampleness needs 1 <= r <= e + 1");
    if (S.with_x)
        throw UnsupportedRangeError("closed-form ampleness is stated on F_{e,r} without x");
    if (!S.points_generic())
        throw UnsupportedRangeError(
            "closed-form ampleness needs points off C_e on pairwise distinct fibers");
    if (!L.belongs_to(S)) throw StructuralError("class does not belong to the surface");

    long long sum = 0;
    for (long long mi : L.m) {
        if (!(L.a > mi && mi > 0)) return false;
        sum += mi;
    }
    if (!(L.b > L.a * S.e)) return false;
    return L.b > sum;
}

PositivityVerdict nakai_verdict(const DivClass& L, const SurfaceModel& S,
                                const ConeGenerators& G) {
    require_anticanonical_range(S);
    if (!L.belongs_to(S)) throw StructuralError("class does not belong to the surface");
    PositivityVerdict v = pair_against(L, S, G.test_classes(), /*strict=*/true);
    v.self_int = self_intersection(L, S);
    if (v.self_int <= 0) v.verdict = false;
    return v;
}

bool nakai_check(const DivClass& L, const SurfaceModel& S, const ConeGenerators& G) {
    return nakai_verdict(L, S, G).verdict;
}

} // namespace fer
