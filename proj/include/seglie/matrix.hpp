#pragma once

#include <optional>
#include <vector>

#include "seglie/rational.hpp"

namespace seglie {

// Dense matrix of exact rationals.
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_.at(static_cast<size_t>(r) * cols_ + c); }
    const Rational& at(int r, int c) const { return a_.at(static_cast<size_t>(r) * cols_ + c); }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix transposed() const;
    std::optional<ExactMatrix> inverse() const;  // nullopt if singular

    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    ExactMatrix rref;
    int rank = 0;
    std::vector<int> pivot_cols;
    // One vector per free column; each annihilates every row of the input.
    std::vector<std::vector<Rational>> nullspace;
};

// Deterministic reduced row echelon form: pivots are found scanning columns
// left to right and rows top to bottom, so the result depends only on the row
// space (plus the zero rows it leaves at the bottom).
RrefResult rref_rank_nullspace(const ExactMatrix& m);

// Incremental row-space builder used for rank computations: rows are reduced
// against the current echelon basis and inserted when independent.
class RowSpace {
  public:
    explicit RowSpace(int cols) : cols_(cols) {}
    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    // Returns true if the row enlarged the space.
    bool insert(std::vector<Rational> row);
    // True iff the row is a linear combination of the inserted ones.
    bool contains(std::vector<Rational> row) const;
    // Fully reduced canonical basis (RREF rows, in pivot order).
    std::vector<std::vector<Rational>> canonical_rows() const;

  private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;  // echelon: rows_[i] has pivot at pivot_[i], normalized to 1
    std::vector<int> pivot_;
    void reduce(std::vector<Rational>& row) const;
};

}  // namespace seglie
