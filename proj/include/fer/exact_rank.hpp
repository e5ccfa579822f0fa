#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <vector>

namespace fer {

// Dense integer matrix, row-major.
struct IntMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<mpz_class> data;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}

    mpz_class& at(size_t i, size_t j) { return data[i * cols + j]; }
    const mpz_class& at(size_t i, size_t j) const { return data[i * cols + j]; }

    void append_row(const std::vector<mpz_class>& row);
};

// Exact rank over Q via Bareiss fraction-free elimination. Deterministic;
// all divisions are exact.
size_t rank_bareiss(IntMatrix m);

} // namespace fer
