#include "folia/linalg.hpp"

#include "folia/errors.hpp"

namespace folia {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.cols_ != y.rows_) throw DimensionMismatch("matrix shapes do not compose");
    RationalMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("only square matrices are invertible");
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const Rational scale = 1 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool SparseEchelon::insert(Row row) {
    while (!row.empty()) {
        auto lead = row.begin();
        auto it = pivots_.find(lead->first);
        if (it == pivots_.end()) {
            const Rational scale = 1 / lead->second;
            for (auto& [c, v] : row) v *= scale;
            const std::size_t col = lead->first;
            pivots_.emplace(col, std::move(row));
            return true;
        }
        const Rational f = lead->second;
        for (const auto& [c, v] : it->second) {
            auto [pos, inserted] = row.try_emplace(c, -f * v);
            if (!inserted) {
                pos->second -= f * v;
                if (pos->second == 0) row.erase(pos);
            }
        }
    }
    return false;
}

}  // namespace folia
