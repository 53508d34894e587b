#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "projhom/scalar.hpp"

namespace projhom {

/* Dense matrix over a fixed exact field, row-major. 0xn and nx0 matrices
 * are first-class; the field is carried explicitly so degenerate shapes
 * still know their arithmetic. */
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, long characteristic);

    static Matrix identity(std::size_t n, long characteristic);
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                            long characteristic = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long characteristic() const { return characteristic_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix column(std::size_t c) const;

    std::string str() const;

private:
    std::size_t index(std::size_t r, std::size_t c) const { return r * cols_ + c; }

    std::size_t rows_;
    std::size_t cols_;
    long characteristic_;
    std::vector<Scalar> entries_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;   // = transform * input, in reduced row-echelon form
    Matrix transform; // invertible
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form an echelonized basis of the right null space (first nonzero
// entry of each column is 1); m * result == 0.
Matrix kernel_basis(const Matrix& m);

// Columns form an echelonized basis of the column space; rank(m) columns.
Matrix image_basis(const Matrix& m);

enum class SolveSide { left, right };

// right: solve a*x = b, left: solve x*a = b. Free coordinates are set to
// zero, so the particular solution is deterministic. Inconsistent systems
// yield nullopt.
std::optional<Matrix> solve_factor(const Matrix& a, const Matrix& b, SolveSide side);

struct MatrixSplit {
    Matrix f; // image basis of e, rank(e) columns
    Matrix g; // f*g == e, g*f == identity
};

// Splits an idempotent matrix through its image. Throws NotIdempotent.
MatrixSplit split_idempotent_matrix(const Matrix& e);

Matrix inverse(const Matrix& m); // throws SingularMatrix

} // namespace projhom
