#include "dissect/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dissect {

Rref::Rref(QMat rows, int cols) : cols_(cols) {
    for (auto& r : rows)
        if (static_cast<int>(r.size()) != cols)
            throw std::invalid_argument("Rref: ragged matrix");
    size_t head = 0;
    for (int col = 0; col < cols && head < rows.size(); ++col) {
        size_t sel = head;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[head], rows[sel]);
        Rational inv = 1 / rows[head][col];
        for (auto& x : rows[head]) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == head || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (int c = 0; c < cols; ++c) rows[r][c] -= f * rows[head][c];
        }
        pivots_.push_back(col);
        ++head;
    }
    rows.resize(head);
    rows_ = std::move(rows);
}

QVec Rref::reduce(QVec v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("Rref::reduce: size mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational f = v[pivots_[r]];
        if (f == 0) continue;
        for (int c = 0; c < cols_; ++c) v[c] -= f * rows_[r][c];
    }
    return v;
}

bool Rref::in_span(const QVec& v) const {
    for (const auto& x : reduce(v))
        if (x != 0) return false;
    return true;
}

std::vector<int> Rref::free_columns() const {
    std::vector<int> out;
    size_t r = 0;
    for (int c = 0; c < cols_; ++c) {
        if (r < pivots_.size() && pivots_[r] == c) { ++r; continue; }
        out.push_back(c);
    }
    return out;
}

int rank_of(QMat m, int cols) {
    return Rref(std::move(m), cols).rank();
}

} // namespace dissect
