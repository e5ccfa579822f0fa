#pragma once

#include <optional>

#include "fer/exact_rank.hpp"
#include "fer/negcurves.hpp"

namespace fer {

//
// Linear systems L(a, b; m_1, ..., m_r) of curves in |a C_e + b f| with
// prescribed multiplicities at r very general points: virtual and expected
// dimension, the actual dimension measured by exact interpolation at random
// rational points, the (-1)-class reduction, and the conjecture scanner.
//

struct LinSysSpec {
    long long e = 0;
    long long a = 0;
    long long b = 0;
    std::vector<long long> mults;

    LinSysSpec() = default;
    LinSysSpec(long long e_, long long a_, long long b_, std::vector<long long> mults_)
        : e(e_), a(a_), b(b_), mults(std::move(mults_)) {
        validate();
    }

    void validate() const;
    int r() const { return static_cast<int>(mults.size()); }
    SurfaceModel surface() const;      // F_{e,r}, very general points
    DivClass strict_transform() const; // a H + b F - sum m_i E_i
};

// dim |a C_e + b f| minus the imposed conditions. When b >= ae this must
// agree with (L^2 - K.L)/2 on the strict transform; the identity is checked
// and a failure raises InvariantError.
long long virtual_dim(const LinSysSpec& spec);

// max(virtual, -1); the dimension of an empty system is -1 by convention.
long long expected_dim(const LinSysSpec& spec);

// -- exact interpolation ----------------------------------------------------

struct ChartPoint {
    mpz_class u;  // fiber-direction coordinate
    mpz_class v;  // base coordinate; fibers are {v = const}
};

// Deterministic sample of r points with integer coordinates in
// [-10^6, 10^6], pairwise distinct and on pairwise distinct fibers.
std::vector<ChartPoint> sample_points(int r, unsigned long long seed);

// Matrix of all vanishing conditions of order < m_i at each point, columns
// indexed by the monomial section basis of |a C_e + b f|.
IntMatrix condition_matrix(const LinSysSpec& spec, const std::vector<ChartPoint>& points);

// dim of the interpolated system: h^0 - 1 - rank(conditions).
long long actual_dim(const LinSysSpec& spec, unsigned long long seed);

// Whether every member of the interpolated system contains C_e, i.e. the
// kernel of the condition matrix is supported away from the level-a block.
// Only meaningful when the system is nonempty.
bool ce_fixed_in_sample(const LinSysSpec& spec, unsigned long long seed);

// -- (-1)-class reduction ---------------------------------------------------

struct ReductionStep {
    enum class Kind { MinusOne, Ce };
    Kind kind = Kind::MinusOne;
    DivClass subtracted;
    long long t = 1;
    long long v_before = 0;
    long long v_after = 0;
};

struct ReductionResult {
    DivClass reduced;
    std::vector<ReductionStep> log;
    // The loop stops early once the class pairs negatively with the nef
    // reference H + (e+1)F: no effective class can, so the system is
    // certified empty and further subtraction cannot change the verdict
    // (the virtual dimension never decreases along the algorithm).
    bool empty_stop = false;

    bool has_ce_step() const;
    bool has_multi_step() const;  // some step subtracted tE with t >= 2
};

// The candidate (-1)-curves used by the reduction: enumerated minus-one
// classes passing the irreducibility and effectivity gates.
std::vector<NegCurveClass> minus_one_curve_classes(const SurfaceModel& S,
                                                   const EnumBounds& bounds);

// Repeatedly subtract t.E for the lexicographically smallest (-1)-curve E
// with L.E = -t < 0, then C_e's strict transform while it pairs negatively;
// stop when nothing does. reversed_order flips the tie-break, which must
// not change the final class (tested as a property, not assumed).
ReductionResult minus_one_reduction(const LinSysSpec& spec,
                                    const std::vector<NegCurveClass>& negs,
                                    bool reversed_order = false);

// v(reduced) > v(spec), both on the class level.
bool is_minus_one_special(const LinSysSpec& spec, const std::vector<NegCurveClass>& negs);

// -- single-spec report -----------------------------------------------------

struct LinSysReport {
    LinSysSpec spec;
    long long virtual_dim = 0;
    long long expected_dim = -1;
    long long actual_dim = -1;            // first seed
    std::vector<long long> actual_by_seed;
    bool seed_stable = true;
    bool special = false;                 // actual > expected
    bool minus_one_special = false;
    std::optional<bool> ce_fixed;         // unset when the system is empty
    ReductionResult reduction;
};

LinSysReport analyze_linsys(const LinSysSpec& spec,
                            const std::vector<unsigned long long>& seeds,
                            const EnumBounds& bounds = EnumBounds::automatic());

// -- conjecture scanner -----------------------------------------------------

struct ScanRange {
    long long lo = 0;
    long long hi = -1;  // empty by default
};

struct ScanGrid {
    ScanRange e, r, a, b, m;  // inclusive ranges; multiplicities are uniform
    std::vector<unsigned long long> seeds;
};

struct ScanCell {
    long long e = 0, r = 0, a = 0, b = 0, m = 0;
    long long virtual_dim = 0;
    long long expected_dim = -1;
    std::vector<long long> actual_by_seed;
    long long actual_dim = -1;
    bool seed_stable = true;
    bool special = false;
    bool minus_one_special = false;
    bool nonreduced_proxy = false;  // a t >= 2 subtraction occurred
    std::optional<bool> ce_fixed;
    long long reduction_steps = 0;
    bool empty_stop = false;
    bool shadow_ok = true;       // minus_one_special => Ce step or t >= 2 step
    bool v_t1_preserved = true;  // every t = 1 step kept v unchanged
    bool standard_range = true;  // b >= ae, where virtual = (L^2 - K.L)/2
    bool conj_equiv_agree = true;        // special == minus_one_special
    bool conj_reduced_violation = false; // nonempty, reduced proxy, Ce not
                                         // fixed, yet special
};

struct SurfaceNegSummary {
    long long e = 0, r = 0;
    // Enumerated classes passing both gates that are neither minus-one
    // classes nor the strict transform of C_e.
    std::vector<DivClass> exceptions;
    std::string bounds_note;
};

struct ScanReport {
    ScanGrid grid;
    std::vector<ScanCell> cells;
    std::vector<SurfaceNegSummary> surfaces;
};

// Evidence-only sweep over the grid; honors FER_THREADS for parallel cells,
// output independent of the schedule.
ScanReport conjecture_scan(const ScanGrid& grid);

} // namespace fer
