#include "seglie/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace seglie {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    ExactMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult rr = rref_rank_nullspace(aug);
    // Invertible iff the left block reduced to the identity.
    for (int i = 0; i < n; ++i)
        if (rr.rref.at(i, i) != 1) return std::nullopt;
    ExactMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.rref.at(i, n + j);
    return inv;
}

RrefResult rref_rank_nullspace(const ExactMatrix& m) {
    RrefResult res;
    res.rref = m;
    ExactMatrix& a = res.rref;
    int rows = a.rows(), cols = a.cols();
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int piv = -1;
        for (int r = lead; r < rows; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(lead, j));
        Rational p = a.at(lead, col);
        for (int j = 0; j < cols; ++j) a.at(lead, j) /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == lead) continue;
            Rational f = a.at(r, col);
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) a.at(r, j) -= f * a.at(lead, j);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivot_cols.size());

    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : res.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(free)] = 1;
        for (int r = 0; r < res.rank; ++r) v[static_cast<size_t>(res.pivot_cols[static_cast<size_t>(r)])] = -a.at(r, free);
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

void RowSpace::reduce(std::vector<Rational>& row) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& f = row[static_cast<size_t>(pivot_[i])];
        if (f == 0) continue;
        Rational factor = f;
        for (int j = 0; j < cols_; ++j)
            if (rows_[i][static_cast<size_t>(j)] != 0) row[static_cast<size_t>(j)] -= factor * rows_[i][static_cast<size_t>(j)];
    }
}

bool RowSpace::insert(std::vector<Rational> row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row width mismatch");
    reduce(row);
    int p = -1;
    for (int j = 0; j < cols_; ++j)
        if (row[static_cast<size_t>(j)] != 0) {
            p = j;
            break;
        }
    if (p < 0) return false;
    Rational lead = row[static_cast<size_t>(p)];
    for (int j = 0; j < cols_; ++j) row[static_cast<size_t>(j)] /= lead;
    // Back-substitute into existing rows so the basis stays fully reduced.
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rational f = rows_[i][static_cast<size_t>(p)];
        if (f == 0) continue;
        for (int j = 0; j < cols_; ++j) rows_[i][static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
    }
    rows_.push_back(std::move(row));
    pivot_.push_back(p);
    return true;
}

bool RowSpace::contains(std::vector<Rational> row) const {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row width mismatch");
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; });
}

std::vector<std::vector<Rational>> RowSpace::canonical_rows() const {
    std::vector<size_t> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivot_[a] < pivot_[b]; });
    std::vector<std::vector<Rational>> out;
    out.reserve(rows_.size());
    for (size_t i : order) out.push_back(rows_[i]);
    return out;
}

}  // namespace seglie
