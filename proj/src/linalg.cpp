#include "rank2/linalg.hpp"

namespace rank2 {

MatrixK::MatrixK(const FieldSpec& field, std::size_t rows, std::size_t cols, std::size_t entry_cap)
    : field_(field), rows_(rows), cols_(cols) {
    if (rows != 0 && cols != 0 && rows > entry_cap / cols)
        throw MatrixTooLarge(std::to_string(rows) + "x" + std::to_string(cols) +
                             " exceeds the entry cap of " + std::to_string(entry_cap));
    entries_.assign(rows * cols, Scalar::zero(field));
}

RrefResult rref(const MatrixK& m) {
    MatrixK a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        // first nonzero entry in this column at or below `row`
        std::size_t pr = row;
        while (pr < a.rows() && a.at(pr, col).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        if (pr != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pr, c), a.at(row, c));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) = a.at(row, c) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) = a.at(r, c) - factor * a.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(a), std::move(pivots)};
}

std::vector<std::vector<Scalar>> kernel_basis(const MatrixK& m) {
    RrefResult r = rref(m);
    const MatrixK& a = r.matrix;
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(m.field()));
        v[free] = Scalar::one(m.field());
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -a.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const MatrixK& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side length " + std::to_string(b.size()) +
                                " does not match " + std::to_string(m.rows()) + " rows");
    MatrixK aug(m.field(), m.rows(), m.cols() + 1, m.rows() * (m.cols() + 1) + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    // inconsistent iff the last column is a pivot
    for (std::size_t p : rr.pivot_cols)
        if (p == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = rr.matrix.at(i, m.cols());
    return x;
}

std::vector<Scalar> matrix_apply(const MatrixK& m, const std::vector<Scalar>& x) {
    if (x.size() != m.cols()) throw DimensionMismatch("vector length does not match column count");
    std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Scalar acc = Scalar::zero(m.field());
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() && !x[c].is_zero()) acc = acc + m.at(r, c) * x[c];
        out[r] = acc;
    }
    return out;
}

}  // namespace rank2
