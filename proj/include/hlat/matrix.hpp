#pragma once

#include "hlat/errors.hpp"
#include "hlat/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hlat {

// Dense matrix over an exact scalar type (Int or Rat).  Deliberately small:
// just what the lattice and determinant-line code needs, all exact.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw invalid_input("matrix literal has ragged rows");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw invalid_input("matrix product: inner dimensions differ");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw invalid_input("matrix sum: shapes differ");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw invalid_input("matrix apply: size mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    // Columns of *this followed by columns of o.
    Mat hcat(const Mat& o) const {
        if (rows_ != o.rows_) throw invalid_input("hcat: row counts differ");
        Mat r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    // Rows of *this followed by rows of o.
    Mat vcat(const Mat& o) const {
        if (cols_ != o.cols_) throw invalid_input("vcat: column counts differ");
        Mat r(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
        return r;
    }

    Mat block(std::size_t i0, std::size_t j0, std::size_t nrows, std::size_t ncols) const {
        Mat r(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

inline QMat to_rational(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// --- exact Gaussian elimination over the rationals -------------------------

// Reduces m to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMat& m);

std::size_t rank(QMat m);

// Determinant of a square rational matrix (fraction-free on a working copy).
Rat det(const QMat& m);

// Canonical kernel basis from the RREF: one column per free variable, ordered
// by free-column index, with entry 1 in the free coordinate.
QMat kernel_basis(const QMat& m);

// One solution x of m x = b, if any.
bool solve(const QMat& m, const std::vector<Rat>& b, std::vector<Rat>& x);

// Solves m X = B columnwise; throws if any column is inconsistent.
QMat solve_matrix(const QMat& m, const QMat& b);

// Pivot rows of the column space of m, i.e. pivot columns of rref(m^T).
// The standard basis vectors on the complementary rows descend to the
// canonical basis of coker(m).
std::vector<std::size_t> column_pivot_rows(const QMat& m);

// Coordinates of the classes [b_j] in coker(m), in the canonical basis above.
// Each column of b is reduced modulo the column space of m.
QMat coker_coords(const QMat& m, const QMat& b);

}  // namespace hlat
