#include "fer/linsys.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "fer/cohomology.hpp"

namespace fer {

namespace {

constexpr long long kPointBox = 1'000'000;
constexpr int kSampleRetries = 128;
constexpr long long kReductionBudget = 100'000;

long long class_virtual_dim(const DivClass& d, const SurfaceModel& S) {
    return riemann_roch_term(d, S);
}

mpz_class falling_factorial(long long k, long long s) {
    mpz_class out = 1;
    for (long long i = 0; i < s; ++i) out *= static_cast<long>(k - i);
    return out;
}

EnumBounds scan_bounds_for(const SurfaceModel& S, std::string* note) {
    if (8 - S.exceptional_rank() > 0) return derive_auto_bounds(S);
    if (note)
        *note = "K^2 <= 0: negative classes enumerated inside a manual box only";
    return EnumBounds::manual(4, 4 * S.e + 8, 4);
}

unsigned scan_thread_count(size_t cells) {
    unsigned n = 1;
    if (const char* env = std::getenv("FER_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = static_cast<unsigned>(v);
    }
    return std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(std::max<size_t>(cells, 1))));
}

} // namespace

void LinSysSpec::validate() const {
    if (e < 0) throw ArgumentError("e must be >= 0");
    if (a < 0) throw ArgumentError("a must be >= 0");
    for (long long m : mults)
        if (m < 0) throw ArgumentError("multiplicities must be >= 0");
    if (mults.size() > 64) throw ArgumentError("too many points");
}

SurfaceModel LinSysSpec::surface() const { return SurfaceModel(e, r()); }

DivClass LinSysSpec::strict_transform() const { return DivClass(a, b, mults); }

long long virtual_dim(const LinSysSpec& spec) {
    spec.validate();
    long long v = (h0_fe(spec.a, spec.b, spec.e) - 1) - conditions_count(spec.mults);
    if (spec.b >= spec.a * spec.e) {
        long long rr = class_virtual_dim(spec.strict_transform(), spec.surface());
        if (rr != v)
            throw InvariantError("virtual dimension disagrees with (L^2 - K.L)/2");
    }
    return v;
}

long long expected_dim(const LinSysSpec& spec) {
    return std::max(virtual_dim(spec), -1LL);
}

std::vector<ChartPoint> sample_points(int r, unsigned long long seed) {
    std::mt19937_64 gen(seed);
    auto draw = [&]() {
        return static_cast<long long>(gen() % (2 * kPointBox + 1)) - kPointBox;
    };
    std::vector<ChartPoint> pts;
    std::set<long long> used_fibers;
    std::set<std::pair<long long, long long>> used_points;
    for (int i = 0; i < r; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kSampleRetries && !placed; ++attempt) {
            long long u = draw();
            long long v = draw();
            if (used_fibers.count(v) || used_points.count({u, v})) continue;
            used_fibers.insert(v);
            used_points.insert({u, v});
            pts.push_back({mpz_class(static_cast<long>(u)), mpz_class(static_cast<long>(v))});
            placed = true;
        }
        if (!placed)
            throw InvariantError("could not sample distinct points in the chart");
    }
    return pts;
}

IntMatrix condition_matrix(const LinSysSpec& spec, const std::vector<ChartPoint>& points) {
    spec.validate();
    if (static_cast<int>(points.size()) != spec.r())
        throw StructuralError("point count does not match the multiplicity vector");
    SectionBasis basis = section_basis(spec.a, spec.b, spec.e);
    const size_t cols = basis.elements.size();
    IntMatrix M(0, cols);

    for (size_t p = 0; p < points.size(); ++p) {
        long long mult = spec.mults[p];
        if (mult == 0) continue;
        // Powers of the coordinates up to the top degrees in the basis.
        std::vector<mpz_class> upow(static_cast<size_t>(spec.a) + 1);
        std::vector<mpz_class> vpow(static_cast<size_t>(std::max(spec.b, 0LL)) + 1);
        upow[0] = 1;
        for (size_t i = 1; i < upow.size(); ++i) upow[i] = upow[i - 1] * points[p].u;
        vpow[0] = 1;
        for (size_t i = 1; i < vpow.size(); ++i) vpow[i] = vpow[i - 1] * points[p].v;

        for (long long s = 0; s < mult; ++s) {
            for (long long t = 0; s + t < mult; ++t) {
                std::vector<mpz_class> row(cols);
                for (size_t c = 0; c < cols; ++c) {
                    auto [k, j] = basis.elements[c];
                    if (s > k || t > j) continue;
                    row[c] = falling_factorial(k, s) * falling_factorial(j, t) *
                             upow[static_cast<size_t>(k - s)] *
                             vpow[static_cast<size_t>(j - t)];
                }
                M.append_row(row);
            }
        }
    }
    return M;
}

long long actual_dim(const LinSysSpec& spec, unsigned long long seed) {
    spec.validate();
    long long h0 = h0_fe(spec.a, spec.b, spec.e);
    if (h0 == 0) return -1;
    std::vector<ChartPoint> pts = sample_points(spec.r(), seed);
    IntMatrix M = condition_matrix(spec, pts);
    size_t rank = M.rows == 0 ? 0 : rank_bareiss(M);
    return h0 - 1 - static_cast<long long>(rank);
}

bool ce_fixed_in_sample(const LinSysSpec& spec, unsigned long long seed) {
    spec.validate();
    SectionBasis basis = section_basis(spec.a, spec.b, spec.e);
    if (basis.elements.empty()) return true;  // empty system, vacuous
    std::vector<ChartPoint> pts = sample_points(spec.r(), seed);
    IntMatrix M = condition_matrix(spec, pts);
    size_t base_rank = M.rows == 0 ? 0 : rank_bareiss(M);

    // The level-a block restricts a section to C_e; the curve contains C_e
    // exactly when that block vanishes on the whole kernel.
    IntMatrix aug = M;
    size_t level_a_cols = 0;
    for (size_t c = 0; c < basis.elements.size(); ++c) {
        if (basis.elements[c].first != spec.a) continue;
        std::vector<mpz_class> unit(basis.elements.size());
        unit[c] = 1;
        aug.append_row(unit);
        ++level_a_cols;
    }
    if (level_a_cols == 0) return true;  // b < ae: C_e is forced
    return rank_bareiss(aug) == base_rank;
}

bool ReductionResult::has_ce_step() const {
    for (const auto& s : log)
        if (s.kind == ReductionStep::Kind::Ce) return true;
    return false;
}

bool ReductionResult::has_multi_step() const {
    for (const auto& s : log)
        if (s.kind == ReductionStep::Kind::MinusOne && s.t >= 2) return true;
    return false;
}

std::vector<NegCurveClass> minus_one_curve_classes(const SurfaceModel& S,
                                                   const EnumBounds& bounds) {
    std::vector<NegCurveClass> out;
    for (const auto& nc : enumerate_neg_classes(S, bounds)) {
        if (nc.kind != NegKind::MinusOne) continue;
        if (!nc.passes_irreducibility || !nc.passes_effectivity) continue;
        out.push_back(nc);
    }
    return out;
}

ReductionResult minus_one_reduction(const LinSysSpec& spec,
                                    const std::vector<NegCurveClass>& negs,
                                    bool reversed_order) {
    spec.validate();
    SurfaceModel S = spec.surface();
    std::vector<NegCurveClass> order = negs;
    if (reversed_order) std::reverse(order.begin(), order.end());

    DivClass ce = DivClass::H(S);  // very general points avoid C_e
    DivClass nef_ref(1, S.e + 1, std::vector<long long>(static_cast<size_t>(S.r), 0));

    ReductionResult res;
    res.reduced = spec.strict_transform();
    long long iters = 0;
    while (true) {
        if (intersect(res.reduced, nef_ref, S) < 0) {
            res.empty_stop = true;
            break;
        }
        bool changed = false;
        for (const auto& nc : order) {
            long long p = intersect(res.reduced, nc.cls, S);
            if (p < 0) {
                long long t = -p;
                ReductionStep step;
                step.kind = ReductionStep::Kind::MinusOne;
                step.subtracted = nc.cls;
                step.t = t;
                step.v_before = class_virtual_dim(res.reduced, S);
                res.reduced = res.reduced - nc.cls * t;
                step.v_after = class_virtual_dim(res.reduced, S);
                res.log.push_back(step);
                changed = true;
                break;
            }
        }
        if (intersect(res.reduced, ce, S) < 0) {
            ReductionStep step;
            step.kind = ReductionStep::Kind::Ce;
            step.subtracted = ce;
            step.t = 1;
            step.v_before = class_virtual_dim(res.reduced, S);
            res.reduced = res.reduced - ce;
            step.v_after = class_virtual_dim(res.reduced, S);
            res.log.push_back(step);
            changed = true;
        }
        if (!changed) break;
        if (++iters > kReductionBudget)
            throw BoundsError("reduction exceeded its step budget; the candidate "
                              "(-1)-curve list is likely incomplete");
    }
    return res;
}

bool is_minus_one_special(const LinSysSpec& spec, const std::vector<NegCurveClass>& negs) {
    ReductionResult res = minus_one_reduction(spec, negs);
    SurfaceModel S = spec.surface();
    return class_virtual_dim(res.reduced, S) >
           class_virtual_dim(spec.strict_transform(), S);
}

LinSysReport analyze_linsys(const LinSysSpec& spec,
                            const std::vector<unsigned long long>& seeds,
                            const EnumBounds& bounds) {
    if (seeds.empty()) throw ArgumentError("at least one seed is required");
    LinSysReport rep;
    rep.spec = spec;
    rep.virtual_dim = virtual_dim(spec);
    rep.expected_dim = expected_dim(spec);
    for (auto seed : seeds) rep.actual_by_seed.push_back(actual_dim(spec, seed));
    rep.actual_dim = rep.actual_by_seed.front();
    rep.seed_stable = std::all_of(rep.actual_by_seed.begin(), rep.actual_by_seed.end(),
                                  [&](long long v) { return v == rep.actual_dim; });
    rep.special = rep.actual_dim > rep.expected_dim;

    SurfaceModel S = spec.surface();
    EnumBounds eb = bounds;
    std::string note;
    if (bounds.derivation == EnumBounds::Derivation::Auto) eb = scan_bounds_for(S, &note);
    auto negs = minus_one_curve_classes(S, eb);
    rep.reduction = minus_one_reduction(spec, negs);
    rep.minus_one_special =
        class_virtual_dim(rep.reduction.reduced, S) >
        class_virtual_dim(spec.strict_transform(), S);
    if (rep.actual_dim >= 0) rep.ce_fixed = ce_fixed_in_sample(spec, seeds.front());
    return rep;
}

ScanReport conjecture_scan(const ScanGrid& grid) {
    if (grid.seeds.empty()) throw ArgumentError("scan needs a non-empty seed list");
    auto check = [](const ScanRange& r, long long cap, const char* what) {
        if (r.hi > cap)
            throw UnsupportedRangeError(std::string("scan grid exceeds the cap for ") + what);
    };
    check(grid.e, 5, "e");
    check(grid.a, 4, "a");
    check(grid.m, 3, "m");
    check(grid.b, 4 * std::max(grid.e.hi, 0LL) + 4, "b");
    if (grid.r.hi > grid.e.hi + 3)
        throw UnsupportedRangeError("scan grid exceeds the cap for r");

    ScanReport report;
    report.grid = grid;

    // Shared negative-class data per surface.
    std::map<std::pair<long long, long long>, std::vector<NegCurveClass>> negs_by_surface;
    for (long long e = grid.e.lo; e <= grid.e.hi; ++e) {
        for (long long r = grid.r.lo; r <= grid.r.hi; ++r) {
            if (r > e + 3 || r < 0 || e < 0) continue;
            SurfaceModel S(e, static_cast<int>(r));
            SurfaceNegSummary summary;
            summary.e = e;
            summary.r = r;
            EnumBounds eb = scan_bounds_for(S, &summary.bounds_note);
            std::vector<NegCurveClass> minus_ones;
            DivClass ce = DivClass::H(S);
            for (const auto& nc : enumerate_neg_classes(S, eb)) {
                if (!nc.passes_irreducibility || !nc.passes_effectivity) continue;
                if (nc.kind == NegKind::MinusOne) minus_ones.push_back(nc);
                else if (!(nc.cls == ce)) summary.exceptions.push_back(nc.cls);
            }
            negs_by_surface[{e, r}] = std::move(minus_ones);
            report.surfaces.push_back(std::move(summary));
        }
    }

    std::vector<ScanCell> cells;
    for (long long e = grid.e.lo; e <= grid.e.hi; ++e)
        for (long long r = grid.r.lo; r <= grid.r.hi; ++r) {
            if (r > e + 3 || r < 0 || e < 0) continue;
            for (long long a = grid.a.lo; a <= grid.a.hi; ++a)
                for (long long b = grid.b.lo; b <= grid.b.hi; ++b) {
                    if (b > 4 * e + 4) continue;
                    for (long long m = grid.m.lo; m <= grid.m.hi; ++m) {
                        ScanCell cell;
                        cell.e = e;
                        cell.r = r;
                        cell.a = a;
                        cell.b = b;
                        cell.m = m;
                        cells.push_back(cell);
                    }
                }
        }

    auto run_cell = [&](ScanCell& cell) {
        LinSysSpec spec(cell.e, cell.a, cell.b,
                        std::vector<long long>(static_cast<size_t>(cell.r), cell.m));
        SurfaceModel S = spec.surface();
        cell.virtual_dim = virtual_dim(spec);
        cell.expected_dim = expected_dim(spec);
        for (auto seed : grid.seeds) cell.actual_by_seed.push_back(actual_dim(spec, seed));
        cell.actual_dim = cell.actual_by_seed.front();
        cell.seed_stable =
            std::all_of(cell.actual_by_seed.begin(), cell.actual_by_seed.end(),
                        [&](long long v) { return v == cell.actual_dim; });
        cell.special = cell.actual_dim > cell.expected_dim;

        const auto& negs = negs_by_surface.at({cell.e, cell.r});
        ReductionResult red = minus_one_reduction(spec, negs);
        cell.minus_one_special = class_virtual_dim(red.reduced, S) >
                                 class_virtual_dim(spec.strict_transform(), S);
        cell.nonreduced_proxy = red.has_multi_step();
        cell.reduction_steps = static_cast<long long>(red.log.size());
        cell.empty_stop = red.empty_stop;
        cell.shadow_ok =
            !cell.minus_one_special || red.has_ce_step() || red.has_multi_step();
        cell.v_t1_preserved = true;
        for (const auto& step : red.log) {
            if (step.kind == ReductionStep::Kind::MinusOne && step.t == 1 &&
                step.v_after != step.v_before)
                cell.v_t1_preserved = false;
        }
        if (cell.actual_dim >= 0)
            cell.ce_fixed = ce_fixed_in_sample(spec, grid.seeds.front());
        cell.standard_range = cell.b >= cell.a * cell.e;
        cell.conj_equiv_agree = cell.special == cell.minus_one_special;
        cell.conj_reduced_violation = cell.actual_dim >= 0 && !cell.nonreduced_proxy &&
                                      cell.ce_fixed.has_value() && !*cell.ce_fixed &&
                                      cell.special;
    };

    unsigned nthreads = scan_thread_count(cells.size());
    if (nthreads <= 1) {
        for (auto& cell : cells) run_cell(cell);
    } else {
        std::vector<std::thread> workers;
        std::atomic<size_t> next{0};
        for (unsigned t = 0; t < nthreads; ++t) {
            workers.emplace_back([&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= cells.size()) break;
                    run_cell(cells[i]);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    report.cells = std::move(cells);
    return report;
}

} // namespace fer
