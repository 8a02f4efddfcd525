#pragma once

// Dense matrices over a BaseField, only what the tower needs.

#include <cstdint>
#include <vector>

#include "gnq/base_field.hpp"

namespace gnq::detail {

struct Mat {
    unsigned rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    Mat() = default;
    Mat(unsigned r, unsigned c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    std::uint8_t& at(unsigned r, unsigned c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(unsigned r, unsigned c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Row reduction of A. On return R = T*A is in reduced echelon form and pivots[i] is the
// pivot column of row i (i < rank).
struct Echelon {
    Mat R, T;
    std::vector<unsigned> pivots;
};

inline Echelon echelon(const BaseField& F, const Mat& A) {
    Echelon E;
    E.R = A;
    E.T = Mat(A.rows, A.rows);
    for (unsigned i = 0; i < A.rows; ++i) E.T.at(i, i) = 1;
    Mat& R = E.R;
    Mat& T = E.T;
    unsigned row = 0;
    for (unsigned col = 0; col < A.cols && row < A.rows; ++col) {
        unsigned piv = row;
        while (piv < A.rows && R.at(piv, col) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != row) {
            for (unsigned c = 0; c < R.cols; ++c) std::swap(R.at(piv, c), R.at(row, c));
            for (unsigned c = 0; c < T.cols; ++c) std::swap(T.at(piv, c), T.at(row, c));
        }
        const std::uint8_t inv = F.inv(R.at(row, col));
        for (unsigned c = 0; c < R.cols; ++c) R.at(row, c) = F.mul(R.at(row, c), inv);
        for (unsigned c = 0; c < T.cols; ++c) T.at(row, c) = F.mul(T.at(row, c), inv);
        for (unsigned r = 0; r < A.rows; ++r) {
            if (r == row) continue;
            const std::uint8_t f = R.at(r, col);
            if (!f) continue;
            for (unsigned c = 0; c < R.cols; ++c) R.at(r, c) = F.sub(R.at(r, c), F.mul(f, R.at(row, c)));
            for (unsigned c = 0; c < T.cols; ++c) T.at(r, c) = F.sub(T.at(r, c), F.mul(f, T.at(row, c)));
        }
        E.pivots.push_back(col);
        ++row;
    }
    return E;
}

// basis of {x : A x = 0}
inline std::vector<std::vector<std::uint8_t>> kernel(const BaseField& F, const Mat& A) {
    Echelon E = echelon(F, A);
    std::vector<bool> is_piv(A.cols, false);
    for (unsigned c : E.pivots) is_piv[c] = true;
    std::vector<std::vector<std::uint8_t>> basis;
    for (unsigned f = 0; f < A.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<std::uint8_t> v(A.cols, 0);
        v[f] = 1;
        for (unsigned r = 0; r < E.pivots.size(); ++r) v[E.pivots[r]] = F.neg(E.R.at(r, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gnq::detail
