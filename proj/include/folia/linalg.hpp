#pragma once

#include "folia/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace folia {

// Dense square or rectangular matrix over Q, row major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) = default;

    // nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

// Incremental row echelon basis for sparse rows keyed by column index.
class SparseEchelon {
public:
    using Row = std::map<std::size_t, Rational>;

    // Reduces the row against the basis; returns true if it was independent.
    bool insert(Row row);
    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    std::map<std::size_t, Row> pivots_;  // leading column -> row normalized to leading 1
};

}  // namespace folia
