#include "fer/cohomology.hpp"

namespace fer {

namespace {
constexpr long long kDegCap = 1'000'000;
}

long long h0_fe(long long a, long long b, long long e) {
    if (e < 0) throw ArgumentError("e must be >= 0");
    if (a < 0) return 0;
    if (a > kDegCap || b > kDegCap || e > kDegCap)
        throw ArgumentError("degrees exceed the supported range");
    if (e == 0) return b < 0 ? 0 : (a + 1) * (b + 1);
    long long total = 0;
    for (long long k = 0; k <= a; ++k) {
        long long t = b - k * e + 1;
        if (t <= 0) break;  // terms only shrink as k grows
        total += t;
    }
    return total;
}

SectionBasis section_basis(long long a, long long b, long long e) {
    if (a < 0) throw ArgumentError("section_basis requires a >= 0");
    if (e < 0) throw ArgumentError("e must be >= 0");
    if (a > kDegCap || b > kDegCap || e > kDegCap)
        throw ArgumentError("degrees exceed the supported range");
    SectionBasis basis;
    basis.e = e;
    basis.a = a;
    basis.b = b;
    for (long long k = 0; k <= a; ++k) {
        long long top = b - k * e;
        for (long long j = 0; j <= top; ++j) basis.elements.emplace_back(k, j);
    }
    return basis;
}

long long conditions_count(std::span<const long long> mults) {
    __int128 total = 0;
    for (long long m : mults) {
        if (m < 0) throw ArgumentError("multiplicities must be >= 0");
        if (m > kDegCap) throw ArgumentError("multiplicity exceeds the supported range");
        total += static_cast<__int128>(m) * (m + 1) / 2;
    }
    if (total > INT64_MAX) throw ArgumentError("condition count does not fit in 64 bits");
    return static_cast<long long>(total);
}

long long conditions_count(const std::vector<long long>& mults) {
    return conditions_count(std::span<const long long>(mults));
}

} // namespace fer
