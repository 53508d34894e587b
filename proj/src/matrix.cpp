#include "projhom/matrix.hpp"

#include <sstream>

namespace projhom {

Matrix::Matrix(std::size_t rows, std::size_t cols, long characteristic)
    : rows_(rows), cols_(cols), characteristic_(characteristic),
      entries_(rows * cols, Scalar::zero(characteristic)) {}

Matrix Matrix::identity(std::size_t n, long characteristic) {
    Matrix m(n, n, characteristic);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, Scalar::one(characteristic));
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows,
                         long characteristic) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    Matrix m(nr, nc, characteristic);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc)
            throw ShapeError("ragged row in matrix literal");
        std::size_t c = 0;
        for (long v : row)
            m.set(r, c++, Scalar::of_int(v, characteristic));
        ++r;
    }
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw ShapeError("matrix index out of range");
    return entries_[index(r, c)];
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_)
        throw ShapeError("matrix index out of range");
    if (v.characteristic() != characteristic_)
        throw FieldMismatch("matrix entry from a different field");
    entries_[index(r, c)] = std::move(v);
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (characteristic_ != o.characteristic_)
        throw FieldMismatch("matrix product across fields");
    if (cols_ != o.rows_)
        throw ShapeError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
    Matrix r(rows_, o.cols_, characteristic_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = entries_[index(i, k)];
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.entries_[o.index(k, j)];
                if (bkj.is_zero())
                    continue;
                r.entries_[r.index(i, j)] += aik * bkj;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (characteristic_ != o.characteristic_)
        throw FieldMismatch("matrix sum across fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ShapeError("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] += o.entries_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    return *this + (-o);
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& e : r.entries_)
        e = -e;
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& e : r.entries_)
        e *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, characteristic_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.entries_[r.index(j, i)] = entries_[index(i, j)];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (characteristic_ != o.characteristic_ || rows_ != o.rows_ || cols_ != o.cols_)
        return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i])
            return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    return *this == identity(rows_, characteristic_);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_)
        throw ShapeError("block out of range");
    Matrix b(nrows, ncols, characteristic_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            b.entries_[b.index(i, j)] = entries_[index(r0 + i, c0 + j)];
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (b.characteristic_ != characteristic_)
        throw FieldMismatch("block from a different field");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw ShapeError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            entries_[index(r0 + i, c0 + j)] = b.entries_[b.index(i, j)];
}

Matrix Matrix::column(std::size_t c) const {
    return block(0, c, rows_, 1);
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j == 0 ? "" : " ") << entries_[index(i, j)].str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw ShapeError("hstack row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.characteristic());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw ShapeError("vstack column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.characteristic());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

RrefResult rref(const Matrix& m) {
    const long ch = m.characteristic();
    Matrix red = m;
    Matrix tr = Matrix::identity(m.rows(), ch);
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;

    auto swap_rows = [&](Matrix& a, std::size_t r1, std::size_t r2) {
        if (r1 == r2)
            return;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Scalar t = a.at(r1, j);
            a.set(r1, j, a.at(r2, j));
            a.set(r2, j, t);
        }
    };
    auto scale_row = [&](Matrix& a, std::size_t r, const Scalar& s) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.set(r, j, a.at(r, j) * s);
    };
    auto add_row = [&](Matrix& a, std::size_t dst, std::size_t src, const Scalar& s) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.set(dst, j, a.at(dst, j) + a.at(src, j) * s);
    };

    for (std::size_t col = 0; col < red.cols() && lead < red.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < red.rows() && red.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == red.rows())
            continue;
        swap_rows(red, lead, pivot);
        swap_rows(tr, lead, pivot);
        Scalar inv = red.at(lead, col).inverse();
        scale_row(red, lead, inv);
        scale_row(tr, lead, inv);
        for (std::size_t r = 0; r < red.rows(); ++r) {
            if (r == lead || red.at(r, col).is_zero())
                continue;
            Scalar factor = -red.at(r, col);
            add_row(red, r, lead, factor);
            add_row(tr, r, lead, factor);
        }
        pivots.push_back(col);
        ++lead;
    }
    return RrefResult{std::move(red), std::move(tr), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

namespace {

// nonzero rows of rref(m^T), transposed back: echelonized column basis of
// the span of m's columns
Matrix echelon_column_basis(const Matrix& m) {
    RrefResult r = rref(m.transpose());
    Matrix out(m.rows(), r.rank, m.characteristic());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            out.set(j, i, r.reduced.at(i, j));
    return out;
}

} // namespace

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivot_cols)
        is_pivot[p] = true;

    std::size_t nfree = m.cols() - r.rank;
    Matrix k(m.cols(), nfree, m.characteristic());
    std::size_t kcol = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j])
            continue;
        k.set(j, kcol, Scalar::one(m.characteristic()));
        for (std::size_t i = 0; i < r.rank; ++i)
            k.set(r.pivot_cols[i], kcol, -r.reduced.at(i, j));
        ++kcol;
    }
    return echelon_column_basis(k);
}

Matrix image_basis(const Matrix& m) {
    return echelon_column_basis(m);
}

std::optional<Matrix> solve_factor(const Matrix& a, const Matrix& b, SolveSide side) {
    if (side == SolveSide::left) {
        // x*a = b  <=>  a^T * x^T = b^T
        auto xt = solve_factor(a.transpose(), b.transpose(), SolveSide::right);
        if (!xt)
            return std::nullopt;
        return xt->transpose();
    }
    if (a.characteristic() != b.characteristic())
        throw FieldMismatch("solve across fields");
    if (a.rows() != b.rows())
        throw ShapeError("solve_factor shape mismatch: lhs " + std::to_string(a.rows()) +
                         " rows, rhs " + std::to_string(b.rows()) + " rows");

    RrefResult r = rref(a);
    Matrix c = r.transform * b;
    // rows below the pivot rows must vanish, else inconsistent
    for (std::size_t i = r.rank; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            if (!c.at(i, j).is_zero())
                return std::nullopt;

    Matrix x(a.cols(), b.cols(), a.characteristic());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            x.set(r.pivot_cols[i], j, c.at(i, j));
    // free coordinates stay zero; check exactness for the non-pivot columns
    // interacting with pivots (the rref already guarantees it)
    return x;
}

MatrixSplit split_idempotent_matrix(const Matrix& e) {
    if (e.rows() != e.cols())
        throw NotIdempotent("idempotent must be square");
    if (e * e != e)
        throw NotIdempotent("matrix is not idempotent");
    Matrix f = image_basis(e);
    auto g = solve_factor(f, e, SolveSide::right);
    if (!g)
        throw Error("internal: idempotent image solve failed");
    if ((*g) * f != Matrix::identity(f.cols(), e.characteristic()))
        throw Error("internal: idempotent splitting failed g*f check");
    return MatrixSplit{std::move(f), std::move(*g)};
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw SingularMatrix("inverse of non-square matrix");
    RrefResult r = rref(m);
    if (r.rank != m.rows())
        throw SingularMatrix("matrix is singular");
    return r.transform;
}

} // namespace projhom
