#pragma once

#include "wl2/rational.hpp"

#include <utility>
#include <vector>

namespace wl2 {

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by index, no zeros

// Column-major sparse matrix over Q.
struct SparseMatrix {
    int rows = 0, cols = 0;
    std::vector<SparseVec> col;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
    void set(int r, int c, const Rational& v);  // appends; caller keeps rows sorted per column or calls normalize()
    void normalize();
    bool is_zero() const;
    SparseMatrix transpose() const;
    SparseVec apply(const SparseVec& x) const;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
int rank(const SparseMatrix& m);

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x);  // y + a x
Rational dot(const SparseVec& x, const SparseVec& y, const std::vector<Rational>& weight);

// Dense matrix over Q, row-major.
struct MatrixQ {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    MatrixQ() = default;
    MatrixQ(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    static MatrixQ identity(int n);
    Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    MatrixQ transpose() const;
    friend bool operator==(const MatrixQ& x, const MatrixQ& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
};

MatrixQ operator*(const MatrixQ& x, const MatrixQ& y);
MatrixQ operator-(const MatrixQ& x, const MatrixQ& y);
int rank(MatrixQ m);
// Stacks matrices with equal column counts vertically.
MatrixQ vstack(const std::vector<MatrixQ>& blocks);

}  // namespace wl2
