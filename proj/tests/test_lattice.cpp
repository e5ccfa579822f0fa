#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fer/lattice.hpp"

using namespace fer;

namespace {

DivClass random_class(const SurfaceModel& S, std::mt19937_64& gen, long long box = 9) {
    auto draw = [&]() {
        return static_cast<long long>(gen() % (2 * box + 1)) - box;
    };
    DivClass d = DivClass::zero(S);
    d.a = draw();
    d.b = draw();
    for (auto& v : d.m) v = draw();
    if (S.with_x) d.mx = draw();
    return d;
}

} // namespace

TEST_CASE("pairing on the minimal surfaces") {
    SurfaceModel f3(3, 0);
    CHECK(intersect(DivClass::H(f3), DivClass::H(f3), f3) == -3);
    CHECK(intersect(DivClass::F(f3), DivClass::F(f3), f3) == 0);
    CHECK(intersect(DivClass::H(f3), DivClass::F(f3), f3) == 1);

    SurfaceModel f0(0, 0);
    CHECK(intersect(DivClass::H(f0), DivClass::H(f0), f0) == 0);
}

TEST_CASE("pairing with exceptional classes") {
    SurfaceModel S(3, 6, true);
    // 3H + 9F - 2 sum E_i - 2E_x
    DivClass d(3, 9, {2, 2, 2, 2, 2, 2}, 2);
    CHECK(intersect(d, d, S) == -1);  // -27 + 54 - 24 - 4

    CHECK(intersect(DivClass::E(S, 0), DivClass::E(S, 0), S) == -1);
    CHECK(intersect(DivClass::E(S, 0), DivClass::E(S, 1), S) == 0);
    CHECK(intersect(DivClass::E(S, 0), DivClass::Ex(S), S) == 0);
    CHECK(intersect(DivClass::E(S, 0), DivClass::H(S), S) == 0);
}

TEST_CASE("canonical class") {
    SurfaceModel f2(2, 0);
    DivClass k = canonical_class(f2);
    CHECK(k.a == -2);
    CHECK(k.b == -4);

    SurfaceModel f0(0, 0);
    DivClass k0 = canonical_class(f0);
    CHECK(k0.a == -2);
    CHECK(k0.b == -2);
    CHECK(self_intersection(k0, f0) == 8);

    // K^2 = 8 - (r + with_x) across the family
    for (long long e = 0; e <= 12; ++e) {
        for (int r = 0; r <= 12; ++r) {
            for (bool with_x : {false, true}) {
                SurfaceModel S(e, r, with_x);
                CHECK(self_intersection(canonical_class(S), S) ==
                      8 - r - (with_x ? 1 : 0));
            }
        }
    }
}

TEST_CASE("canonical class K.E_i = -1") {
    SurfaceModel S(4, 3);
    for (int i = 0; i < 3; ++i)
        CHECK(k_degree(DivClass::E(S, i), S) == -1);
}

TEST_CASE("arithmetic genus") {
    SurfaceModel S(3, 4);
    CHECK(arithmetic_genus(DivClass::E(S, 2), S) == 0);
    CHECK(arithmetic_genus(DivClass::H(S), S) == 0);
    CHECK(arithmetic_genus(-canonical_class(S), S) == 1);
    CHECK(arithmetic_genus(DivClass::F(S), S) == 0);
}

TEST_CASE("bilinearity and symmetry on random classes") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 200; ++trial) {
        SurfaceModel S(static_cast<long long>(gen() % 7), static_cast<int>(gen() % 6),
                       (gen() & 1) != 0);
        DivClass d1 = random_class(S, gen);
        DivClass d2 = random_class(S, gen);
        DivClass d3 = random_class(S, gen);
        CHECK(intersect(d1, d2, S) == intersect(d2, d1, S));
        CHECK(intersect(d1 + d2, d3, S) ==
              intersect(d1, d3, S) + intersect(d2, d3, S));
        long long k = static_cast<long long>(gen() % 7) - 3;
        CHECK(intersect(d1 * k, d2, S) == k * intersect(d1, d2, S));
    }
}

TEST_CASE("signature: one positive direction") {
    // Leading minors of the Gram matrix of (F, H, E_1, ..., E_r): starting
    // from the hyperbolic 2x2 block the determinant signs must alternate,
    // which pins the signature at (1, rank - 1). (F first keeps the corner
    // minor nonzero when e = 0.)
    for (long long e : {0LL, 1LL, 3LL}) {
        for (int r = 0; r <= 4; ++r) {
            SurfaceModel S(e, r);
            std::vector<DivClass> basis{DivClass::F(S), DivClass::H(S)};
            for (int i = 0; i < r; ++i) basis.push_back(DivClass::E(S, i));
            // det of the leading k x k minor, k >= 2, by cofactor growth:
            // the E-part is diagonal -1, so det_k = det_2 * (-1)^(k-2).
            long long det2 =
                intersect(basis[0], basis[0], S) * intersect(basis[1], basis[1], S) -
                intersect(basis[0], basis[1], S) * intersect(basis[1], basis[0], S);
            CHECK(det2 == -1);
            long long det = det2;
            for (size_t k = 2; k < basis.size(); ++k) {
                det *= intersect(basis[k], basis[k], S);
                CHECK((k % 2 == 0 ? det > 0 : det < 0));
            }
        }
    }
}

TEST_CASE("errors: shape mismatch and parity") {
    SurfaceModel S(2, 3);
    DivClass wrong(1, 1, {1, 1});  // only 2 multiplicities
    CHECK_THROWS_AS(intersect(wrong, DivClass::H(S), S), StructuralError);

    SurfaceModel Sx(2, 3, true);
    DivClass no_x(1, 1, {1, 1, 1});
    CHECK_THROWS_AS((void)intersect(no_x, DivClass::H(Sx), Sx), StructuralError);

    CHECK_THROWS_AS(SurfaceModel(-1, 0), ArgumentError);
    CHECK_THROWS_AS(SurfaceModel(2, -1), ArgumentError);
}

TEST_CASE("class string rendering") {
    SurfaceModel S(3, 2, true);
    DivClass d(1, 4, {2, 0}, 1);
    CHECK(d.str() == "1,4,2,0,1");
    CHECK(d.without_x().str() == "1,4,2,0");
}

#include "fer/json_io.hpp"

TEST_CASE("json round-trips classes and surfaces") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        SurfaceModel S(static_cast<long long>(gen() % 5), static_cast<int>(gen() % 5),
                       (gen() & 1) != 0);
        DivClass d = random_class(S, gen);
        CHECK(divclass_from_json(divclass_to_json(d)) == d);
        CHECK(surface_from_json(surface_to_json(S)) == S);
        CHECK(parse_class_string(d.str(), S) == d);
    }
    SurfaceModel cfg(2, 2, false,
                     PointConfig::configured({true, false}, {4, 9}));
    SurfaceModel back = surface_from_json(surface_to_json(cfg));
    CHECK(back.config.kind == PointConfig::Kind::Configured);
    CHECK(back.config.fiber_id == std::vector<int>{4, 9});

    SurfaceModel S3(1, 2);
    CHECK_THROWS_AS(parse_class_string("1,2,3", S3), ArgumentError);
}
