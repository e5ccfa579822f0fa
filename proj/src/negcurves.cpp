#include "fer/negcurves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <tuple>

#include "fer/cohomology.hpp"

namespace fer {

namespace {

struct System {
    NegKind kind;
    long long d;  // target D^2
    long long c;  // target K.D
};

constexpr System kSystems[] = {
    {NegKind::MinusOne, -1, -1},
    {NegKind::MinusTwo, -2, 0},
};

long long isqrt_floor(long long v) {
    if (v < 0) throw InvariantError("isqrt of a negative number");
    long long s = static_cast<long long>(sqrtl(static_cast<long double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

long long ceil_div(long long num, long long den) {
    return -floor_div(-num, den);
}

// Interval of integers t with (t*K2 + off)^2 <= rhs.
std::pair<long long, long long> scaled_interval(long long K2, long long off, long long rhs) {
    if (rhs < 0) return {1, 0};  // empty
    long long s = isqrt_floor(rhs);
    return {ceil_div(-s - off, K2), floor_div(s - off, K2)};
}

// Vectors n in [lo, hi]^slots with given sum and sum of squares, emitted in
// lexicographically increasing order.
void fill_slots(int slot, int slots, long long lo, long long hi, long long rem_sum,
                long long rem_sq, std::vector<long long>& n,
                const std::function<void(const std::vector<long long>&)>& emit) {
    if (slot == slots) {
        if (rem_sum == 0 && rem_sq == 0) emit(n);
        return;
    }
    long long k = slots - slot;
    long long cap = std::max(lo * lo, hi * hi);
    for (long long v = lo; v <= hi; ++v) {
        long long s2 = rem_sum - v;
        long long q2 = rem_sq - v * v;
        if (q2 < 0) continue;
        long long rest = k - 1;
        if (rest == 0) {
            if (s2 == 0 && q2 == 0) {
                n[static_cast<size_t>(slot)] = v;
                emit(n);
            }
            continue;
        }
        if (q2 > rest * cap) continue;
        if (s2 * s2 > rest * q2) continue;  // Cauchy-Schwarz
        n[static_cast<size_t>(slot)] = v;
        fill_slots(slot + 1, slots, lo, hi, s2, q2, n, emit);
    }
}

// Pure exceptional shapes: a single -1 entry among the m (class E_i, with
// mx in {0, 1} covering E_i - E_x), or the bare E_x.
struct ExceptionalPattern {
    bool is_e_i = false;   // E_i, possibly minus E_x
    bool is_e_x = false;   // bare E_x
    size_t index = 0;
};

std::optional<ExceptionalPattern> match_exceptional(const DivClass& cls) {
    if (cls.a != 0 || cls.b != 0) return std::nullopt;
    size_t neg_at = cls.m.size();
    for (size_t i = 0; i < cls.m.size(); ++i) {
        if (cls.m[i] == -1 && neg_at == cls.m.size()) {
            neg_at = i;
        } else if (cls.m[i] != 0) {
            return std::nullopt;
        }
    }
    ExceptionalPattern p;
    if (neg_at < cls.m.size()) {
        // E_i or E_i - E_x
        if (cls.mx != 0 && cls.mx != 1) return std::nullopt;
        p.is_e_i = true;
        p.index = neg_at;
        return p;
    }
    if (cls.has_x && cls.mx == -1) {
        p.is_e_x = true;
        return p;
    }
    return std::nullopt;
}

} // namespace

EnumBounds derive_auto_bounds(const SurfaceModel& S) {
    S.validate();
    long long K2 = 8 - S.exceptional_rank();
    if (K2 <= 0)
        throw BoundsError(
            "automatic bound derivation needs K^2 > 0 (here K^2 = " + std::to_string(K2) +
            "); supply manual enumeration bounds");
    long long e = S.e;
    EnumBounds bounds;
    bounds.derivation = EnumBounds::Derivation::Auto;
    for (const System& sys : kSystems) {
        long long disc = sys.c * sys.c - sys.d * K2;  // > 0
        auto [alo, ahi] = scaled_interval(K2, 2 * sys.c, 4 * disc);
        auto [nlo, nhi] = scaled_interval(K2, sys.c, disc * (K2 + 1));
        auto [wlo, whi] =
            scaled_interval(K2, -sys.c * (e - 2), disc * (e * K2 + (e - 2) * (e - 2)));
        bounds.a_max = std::max({bounds.a_max, std::abs(alo), std::abs(ahi)});
        bounds.m_max = std::max({bounds.m_max, std::abs(nlo), std::abs(nhi)});
        for (long long alpha : {alo, ahi}) {
            for (long long w : {wlo, whi}) {
                bounds.b_max = std::max(bounds.b_max, std::abs(e * alpha + w));
            }
        }
    }
    return bounds;
}

std::vector<NegCurveClass> enumerate_neg_classes(const SurfaceModel& S,
                                                 const EnumBounds& bounds) {
    S.validate();
    EnumBounds box = bounds;
    if (bounds.derivation == EnumBounds::Derivation::Auto) box = derive_auto_bounds(S);
    if (box.a_max < 0 || box.b_max < 0 || box.m_max < 0)
        throw ArgumentError("enumeration bounds must be >= 0");

    const long long e = S.e;
    const int slots = S.exceptional_rank();
    std::vector<NegCurveClass> out;

    for (const System& sys : kSystems) {
        for (long long alpha = -box.a_max; alpha <= box.a_max; ++alpha) {
            for (long long beta = -box.b_max; beta <= box.b_max; ++beta) {
                long long sum = sys.c - (e - 2) * alpha + 2 * beta;
                long long sq = 2 * alpha * beta - e * alpha * alpha - sys.d;
                if (sq < 0) continue;
                if (sq > slots * box.m_max * box.m_max) continue;
                if (std::abs(sum) > slots * box.m_max) continue;
                if (slots == 0) {
                    if (sum != 0 || sq != 0) continue;
                    DivClass cls(alpha, beta);
                    cls.has_x = S.with_x;
                    out.push_back({cls, sys.kind, false, false, false});
                    continue;
                }
                if (static_cast<__int128>(sum) * sum > static_cast<__int128>(slots) * sq)
                    continue;
                std::vector<long long> n(static_cast<size_t>(slots), 0);
                fill_slots(0, slots, -box.m_max, box.m_max, sum, sq, n,
                           [&](const std::vector<long long>& filled) {
                               DivClass cls(alpha, beta,
                                            std::vector<long long>(
                                                filled.begin(),
                                                filled.begin() + S.r));
                               cls.has_x = S.with_x;
                               if (S.with_x) cls.mx = filled.back();
                               out.push_back({cls, sys.kind, false, false, false});
                           });
            }
        }
    }

    for (auto& nc : out) {
        // Re-check the defining equations through the public pairing.
        long long d2 = self_intersection(nc.cls, S);
        long long kd = k_degree(nc.cls, S);
        long long want_d = nc.kind == NegKind::MinusOne ? -1 : -2;
        long long want_c = nc.kind == NegKind::MinusOne ? -1 : 0;
        if (d2 != want_d || kd != want_c)
            throw InvariantError("enumerated class fails its defining system");
        nc.passes_irreducibility = structural_filter(nc.cls, S);
        nc.passes_very_general = xu_filter(nc.cls, S);
        nc.passes_effectivity = effectivity_heuristic(nc.cls, S);
    }

    std::sort(out.begin(), out.end(), [](const NegCurveClass& x, const NegCurveClass& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        return x.cls < y.cls;
    });
    return out;
}

bool structural_filter(const DivClass& cls, const SurfaceModel& S) {
    if (!cls.belongs_to(S))
        throw StructuralError("class does not belong to the surface");
    const long long a = cls.a;
    const long long b = cls.b;
    if (a == 0 && b == 0) {
        auto p = match_exceptional(cls);
        return p.has_value();
    }
    if (a < 0) return false;
    for (long long v : cls.m)
        if (v < 0) return false;
    if (cls.mx < 0) return false;
    if (a == 0) return b == 1;
    if (b == 0) return a == 1;
    if (b < a * S.e) return false;
    // In the moving range the multiplicity at any point is capped by the
    // fiber degree: an irreducible curve distinct from the fiber through the
    // point meets it in at most a points.
    for (long long v : cls.m)
        if (v > a) return false;
    if (cls.mx > a) return false;
    return true;
}

bool xu_filter(const DivClass& cls, const SurfaceModel& S) {
    if (!cls.belongs_to(S))
        throw StructuralError("class does not belong to the surface");
    long long min_pos = 0;
    for (long long v : cls.m)
        if (v > 0 && (min_pos == 0 || v < min_pos)) min_pos = v;
    if (cls.mx > 0 && (min_pos == 0 || cls.mx < min_pos)) min_pos = cls.mx;
    if (min_pos == 0) return true;  // no point constraints, vacuous
    return self_intersection(cls, S) >= -min_pos;
}

bool effectivity_heuristic(const DivClass& cls, const SurfaceModel& S) {
    if (!cls.belongs_to(S))
        throw StructuralError("class does not belong to the surface");
    if (cls.a == 0 && cls.b == 0) {
        auto p = match_exceptional(cls);
        if (!p) return false;
        if (p->is_e_x) return true;
        // E_i is a curve; E_i - E_x would need x on E_i, and x is always
        // modeled as very general here.
        return cls.mx == 0;
    }
    if (cls.a < 0) return false;
    for (long long v : cls.m)
        if (v < 0) return false;
    if (cls.mx < 0) return false;

    if (cls.a == 0 && cls.b == 1 && !S.config.is_very_general()) {
        // A fiber has multiplicity at most one anywhere, and passes through
        // a prescribed set of points only if they share its fiber.
        if (cls.mx != 0) return false;  // x is very general, on no p_i's fiber
        int fiber = 0;
        bool seen = false;
        for (size_t i = 0; i < cls.m.size(); ++i) {
            if (cls.m[i] == 0) continue;
            if (cls.m[i] != 1) return false;
            int id = S.config.fiber_id[i];
            if (seen && id != fiber) return false;
            fiber = id;
            seen = true;
        }
        return true;
    }

    std::vector<long long> mults(cls.m.begin(), cls.m.end());
    if (S.with_x) mults.push_back(cls.mx);
    return h0_fe(cls.a, cls.b, S.e) > conditions_count(mults);
}

std::vector<NegCurveClass> through_x_candidates(const SurfaceModel& S,
                                                const EnumBounds& bounds) {
    if (!S.with_x)
        throw StructuralError("through-x candidates require a surface with the extra point x");
    std::vector<NegCurveClass> all = enumerate_neg_classes(S, bounds);
    if (all.empty())
        throw BoundsError("enumeration produced no classes; bounds too small");
    std::vector<NegCurveClass> out;
    for (const auto& nc : all) {
        if (nc.cls.a < 0) continue;
        if (nc.cls.b < nc.cls.a * S.e) continue;
        if (nc.cls.mx < 1) continue;
        out.push_back(nc);
    }
    return out;
}

std::vector<ClassFamily> group_families(const std::vector<NegCurveClass>& classes) {
    using Key = std::tuple<long long, long long, long long, std::vector<long long>, int>;
    std::map<Key, ClassFamily> groups;
    for (const auto& nc : classes) {
        std::vector<long long> pattern = nc.cls.m;
        std::sort(pattern.begin(), pattern.end(), std::greater<>());
        Key key{nc.cls.a, nc.cls.b, nc.cls.mx, pattern, static_cast<int>(nc.kind)};
        auto it = groups.find(key);
        if (it == groups.end()) {
            ClassFamily fam;
            fam.a = nc.cls.a;
            fam.b = nc.cls.b;
            fam.mx = nc.cls.mx;
            fam.pattern = pattern;
            fam.kind = nc.kind;
            it = groups.emplace(key, std::move(fam)).first;
        }
        it->second.members.push_back(nc.cls);
    }
    std::vector<ClassFamily> out;
    out.reserve(groups.size());
    for (auto& [key, fam] : groups) out.push_back(std::move(fam));
    return out;
}

} // namespace fer
