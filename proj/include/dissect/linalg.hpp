#pragma once

#include "dissect/rational.hpp"

#include <vector>

namespace dissect {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// Reduced row echelon form over Q, with exact pivots.
class Rref {
public:
    Rref() = default;
    Rref(QMat rows, int cols);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const QMat& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Clear the pivot coordinates of v; the result is supported on
    // non-pivot columns.
    QVec reduce(QVec v) const;
    bool in_span(const QVec& v) const;

    // Columns that carry no pivot, ascending: they index a basis of the
    // quotient by the row span.
    std::vector<int> free_columns() const;

private:
    QMat rows_;
    std::vector<int> pivots_; // pivot column of each row, strictly increasing
    int cols_ = 0;
};

int rank_of(QMat m, int cols);

} // namespace dissect
