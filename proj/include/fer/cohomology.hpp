#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fer/lattice.hpp"

namespace fer {

//
// Global sections of a*C_e + b*f on F_e decompose along the ruling:
//
//     H^0(a C_e + b f) = (+) over k = 0..a of H^0(P^1, O(b - ke)),
//
// so h^0 = sum_k max(0, b - ke + 1). A level-k section of fiber degree j is
// the monomial u^k v^j in the dense affine chart obtained by removing C_e
// and one fiber; u is the fiber-direction coordinate, v the base coordinate
// (fibers are {v = const}, C_e sits at infinity in the u direction). All
// interpolation in this library happens in that chart; very general points
// miss the removed locus, so nothing is lost.
//

// dim H^0(a C_e + b f); 0 when a < 0.
long long h0_fe(long long a, long long b, long long e);

// Monomial basis of H^0(a C_e + b f): pairs (k, j), 0 <= k <= a,
// 0 <= j <= b - ke, evaluating as u^k v^j in the chart above.
struct SectionBasis {
    long long e = 0;
    long long a = 0;
    long long b = 0;
    std::vector<std::pair<long long, long long>> elements;
};

SectionBasis section_basis(long long a, long long b, long long e);

// Number of linear conditions imposed by points of the given multiplicities:
// sum of binomial(m_i + 1, 2). Entries must be >= 0.
long long conditions_count(std::span<const long long> mults);
long long conditions_count(const std::vector<long long>& mults);

// (D^2 - K.D)/2, the Riemann-Roch strict lower bound for h^0 of classes
// with h^2 = 0 (every use in this library).
inline long long rr_lower_bound(const DivClass& d, const SurfaceModel& S) {
    return riemann_roch_term(d, S);
}

} // namespace fer
