#pragma once

#include <stdexcept>
#include <vector>

#include "permlat/numeric.hpp"
#include "permlat/perm.hpp"

namespace permlat {

// Dense exact matrix, row-major, 0-based indexing. T is Int or Rat.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), T(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& columns, int rows) {
        Matrix m(rows, static_cast<int>(columns.size()));
        for (int j = 0; j < m.cols(); ++j) {
            const auto& c = columns[static_cast<std::size_t>(j)];
            if (static_cast<int>(c.size()) != rows)
                throw std::invalid_argument("column length does not match row count");
            for (int i = 0; i < rows; ++i) m.at(i, j) = c[static_cast<std::size_t>(i)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return data_[index(i, j)]; }
    const T& at(int i, int j) const { return data_[index(i, j)]; }

    std::vector<T> column(int j) const {
        std::vector<T> c(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = at(i, j);
        return c;
    }

    std::vector<std::vector<T>> columns() const {
        std::vector<std::vector<T>> out;
        out.reserve(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) out.push_back(column(j));
        return out;
    }

    void swap_columns(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix operator*(const Matrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < other.cols_; ++j) m.at(i, j) += a * other.at(k, j);
            }
        return m;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> out(static_cast<std::size_t>(rows_), T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        return out;
    }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

private:
    int rows_, cols_;
    std::vector<T> data_;

    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

IntMatrix permutation_matrix(const Permutation& tau);

RatMatrix to_rational(const IntMatrix& m);
// scale each row by the lcm of its denominators (rank-preserving)
IntMatrix clear_denominators_by_row(const RatMatrix& m);

// exact rank via fraction-free (Bareiss) elimination
int rank(const IntMatrix& m);
int rank(const RatMatrix& m);

// determinant of a square integer matrix, fraction-free
Int bareiss_determinant(const IntMatrix& m);

// Column-style Hermite normal form: h = m * u with u unimodular. Pivots
// descend strictly (lower-triangular staircase), each pivot is positive and
// the entries to its left in the pivot row lie in [0, pivot). Zero columns
// trail on the right.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    int rank;
};
HnfResult hnf(const IntMatrix& m);

// Gauss-Jordan inverse; throws on singular input
RatMatrix rat_inverse(const RatMatrix& m);

// b^t * b
IntMatrix gram_matrix(const IntMatrix& basis);

}  // namespace permlat
