#pragma once

// Exact dense linear algebra over the coefficient field: RREF, canonical
// kernel bases, and linear solves. Plain fraction elimination with
// leading-entry pivoting; desk-scale by design.

#include <cstddef>
#include <optional>
#include <vector>

#include "rank2/scalar.hpp"

namespace rank2 {

class MatrixK {
public:
    static constexpr std::size_t kDefaultEntryCap = 200'000;

    MatrixK(const FieldSpec& field, std::size_t rows, std::size_t cols,
            std::size_t entry_cap = kDefaultEntryCap);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpec& field() const noexcept { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const MatrixK& o) const noexcept {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
    }

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    MatrixK matrix;
    std::vector<std::size_t> pivot_cols;  // strictly increasing
};

RrefResult rref(const MatrixK& m);

// Canonical kernel basis read off the RREF free columns: one vector per free
// column (ascending), with 1 at its own free column and 0 at the others.
std::vector<std::vector<Scalar>> kernel_basis(const MatrixK& m);

// A solution of m x = b if one exists: the RREF particular solution with all
// free variables set to 0. Throws DimensionMismatch if b has the wrong length.
std::optional<std::vector<Scalar>> solve(const MatrixK& m, const std::vector<Scalar>& b);

std::vector<Scalar> matrix_apply(const MatrixK& m, const std::vector<Scalar>& x);

}  // namespace rank2
