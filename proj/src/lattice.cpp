#include "fer/lattice.hpp"

#include <algorithm>
#include <set>

namespace fer {

namespace {

constexpr long long kCoeffCap = 1LL << 40;
constexpr long long kECap = 1LL << 20;
constexpr int kRCap = 64;

void check_coeff(long long v) {
    if (v > kCoeffCap || v < -kCoeffCap)
        throw ArgumentError("divisor coefficient exceeds the overflow-safe range");
}

long long narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw ArgumentError(std::string(what) + " does not fit in 64 bits");
    return static_cast<long long>(v);
}

} // namespace

void SurfaceModel::validate() const {
    if (e < 0) throw ArgumentError("Hirzebruch invariant e must be >= 0");
    if (e > kECap) throw ArgumentError("e exceeds the overflow-safe range");
    if (r < 0) throw ArgumentError("number of blown-up points must be >= 0");
    if (r > kRCap) throw ArgumentError("too many blown-up points");
    if (config.kind == PointConfig::Kind::Configured) {
        if (static_cast<int>(config.on_ce.size()) != r ||
            static_cast<int>(config.fiber_id.size()) != r)
            throw StructuralError("configured point data must list exactly r entries");
    }
}

bool SurfaceModel::points_generic() const {
    if (config.is_very_general()) return true;
    for (bool on : config.on_ce)
        if (on) return false;
    std::set<int> fibers(config.fiber_id.begin(), config.fiber_id.end());
    return static_cast<int>(fibers.size()) == r;
}

SurfaceModel SurfaceModel::blown_up_at_x() const {
    SurfaceModel s = *this;
    s.with_x = true;
    return s;
}

DivClass DivClass::zero(const SurfaceModel& S) {
    DivClass d(0, 0, std::vector<long long>(static_cast<size_t>(S.r), 0));
    d.has_x = S.with_x;
    return d;
}

DivClass DivClass::H(const SurfaceModel& S) {
    DivClass d = zero(S);
    d.a = 1;
    return d;
}

DivClass DivClass::F(const SurfaceModel& S) {
    DivClass d = zero(S);
    d.b = 1;
    return d;
}

DivClass DivClass::E(const SurfaceModel& S, int i) {
    if (i < 0 || i >= S.r) throw StructuralError("exceptional index out of range");
    DivClass d = zero(S);
    d.m[static_cast<size_t>(i)] = -1;  // E_i = -(-1) E_i in the stored convention
    return d;
}

DivClass DivClass::Ex(const SurfaceModel& S) {
    if (!S.with_x) throw StructuralError("surface has no extra point x");
    DivClass d = zero(S);
    d.mx = -1;
    return d;
}

DivClass DivClass::without_x() const {
    DivClass d = *this;
    d.has_x = false;
    d.mx = 0;
    return d;
}

DivClass DivClass::with_x_mult(long long k) const {
    DivClass d = *this;
    d.has_x = true;
    d.mx = k;
    return d;
}

DivClass DivClass::operator+(const DivClass& o) const {
    if (m.size() != o.m.size() || has_x != o.has_x)
        throw StructuralError("divisor class shape mismatch in addition");
    DivClass d = *this;
    d.a += o.a;
    d.b += o.b;
    for (size_t i = 0; i < m.size(); ++i) d.m[i] += o.m[i];
    d.mx += o.mx;
    return d;
}

DivClass DivClass::operator-(const DivClass& o) const { return *this + (-o); }

DivClass DivClass::operator-() const {
    DivClass d = *this;
    d.a = -d.a;
    d.b = -d.b;
    for (auto& v : d.m) v = -v;
    d.mx = -d.mx;
    return d;
}

DivClass DivClass::operator*(long long k) const {
    DivClass d = *this;
    d.a *= k;
    d.b *= k;
    for (auto& v : d.m) v *= k;
    d.mx *= k;
    return d;
}

std::strong_ordering DivClass::operator<=>(const DivClass& o) const {
    if (auto c = a <=> o.a; c != 0) return c;
    if (auto c = b <=> o.b; c != 0) return c;
    if (auto c = m <=> o.m; c != 0) return c;
    return mx <=> o.mx;
}

std::string DivClass::str() const {
    std::string s = std::to_string(a) + "," + std::to_string(b);
    for (long long v : m) s += "," + std::to_string(v);
    if (has_x) s += "," + std::to_string(mx);
    return s;
}

long long intersect(const DivClass& d1, const DivClass& d2, const SurfaceModel& S) {
    if (!d1.belongs_to(S) || !d2.belongs_to(S))
        throw StructuralError("divisor class does not match the surface (r or with_x differ)");
    check_coeff(d1.a); check_coeff(d1.b); check_coeff(d2.a); check_coeff(d2.b);
    for (long long v : d1.m) check_coeff(v);
    for (long long v : d2.m) check_coeff(v);
    check_coeff(d1.mx); check_coeff(d2.mx);

    __int128 acc = -static_cast<__int128>(S.e) * d1.a * d2.a;
    acc += static_cast<__int128>(d1.a) * d2.b;
    acc += static_cast<__int128>(d2.a) * d1.b;
    for (size_t i = 0; i < d1.m.size(); ++i)
        acc -= static_cast<__int128>(d1.m[i]) * d2.m[i];
    if (S.with_x) acc -= static_cast<__int128>(d1.mx) * d2.mx;
    return narrow(acc, "intersection number");
}

DivClass canonical_class(const SurfaceModel& S) {
    DivClass k(-2, -(S.e + 2), std::vector<long long>(static_cast<size_t>(S.r), -1));
    k.has_x = S.with_x;
    k.mx = S.with_x ? -1 : 0;
    return k;
}

long long self_intersection(const DivClass& d, const SurfaceModel& S) {
    return intersect(d, d, S);
}

long long k_degree(const DivClass& d, const SurfaceModel& S) {
    return intersect(canonical_class(S), d, S);
}

long long arithmetic_genus(const DivClass& d, const SurfaceModel& S) {
    long long num = self_intersection(d, S) + k_degree(d, S);
    if (num % 2 != 0)
        throw InvariantError("D^2 + K.D is odd; the lattice data is malformed");
    return 1 + num / 2;
}

long long riemann_roch_term(const DivClass& d, const SurfaceModel& S) {
    long long num = self_intersection(d, S) - k_degree(d, S);
    if (num % 2 != 0)
        throw InvariantError("D^2 - K.D is odd; the lattice data is malformed");
    return num / 2;
}

} // namespace fer
