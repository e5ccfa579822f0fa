#include "fer/exact_rank.hpp"

#include <stdexcept>

namespace fer {

void IntMatrix::append_row(const std::vector<mpz_class>& row) {
    if (row.size() != cols) throw std::invalid_argument("row length mismatch");
    data.insert(data.end(), row.begin(), row.end());
    ++rows;
}

size_t rank_bareiss(IntMatrix m) {
    size_t rank = 0;
    mpz_class prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t pivot = row;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row) {
            for (size_t j = col; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        }
        const mpz_class piv = m.at(row, col);
        for (size_t i = row + 1; i < m.rows; ++i) {
            for (size_t j = col + 1; j < m.cols; ++j) {
                mpz_class t = m.at(i, j) * piv - m.at(i, col) * m.at(row, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(t);
            }
            m.at(i, col) = 0;
        }
        prev = piv;
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace fer
