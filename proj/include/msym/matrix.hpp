#pragma once

#include "msym/polynomial.hpp"
#include "msym/tensor.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace msym {

// Dense rational matrix with exact Gauss-Jordan elimination. Sizes here
// are combinatorial (C(n,k) rows/columns), small enough that fraction-free
// tricks are unnecessary.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0))
    {
    }

    static RatMatrix identity(int n)
    {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

    RatMatrix transposed() const
    {
        RatMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
    {
        if (a.cols_ != b.rows_) throw input_error("matrix product shape mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("matrix shape mismatch");
        RatMatrix r(a.rows_, a.cols_);
        for (std::size_t t = 0; t < a.data_.size(); ++t) r.data_[t] = a.data_[t] - b.data_[t];
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const
    {
        if (static_cast<int>(v.size()) != cols_) throw input_error("matrix-vector shape mismatch");
        std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        return out;
    }

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref()
    {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int pr = -1;
            for (int i = row; i < rows_; ++i) {
                if (at(i, col) != 0) { pr = i; break; }
            }
            if (pr < 0) continue;
            if (pr != row) swap_rows(pr, row);
            Rational inv = Rational(1) / at(row, col);
            for (int j = col; j < cols_; ++j) at(row, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || at(i, col) == 0) continue;
                Rational f = at(i, col);
                for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const
    {
        RatMatrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    // Basis of {x : Ax = 0}, one vector per free column, deterministic.
    std::vector<std::vector<Rational>> nullspace() const
    {
        RatMatrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        std::vector<std::vector<Rational>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[static_cast<std::size_t>(free)]) continue;
            std::vector<Rational> v(static_cast<std::size_t>(cols_), Rational(0));
            v[static_cast<std::size_t>(free)] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // One exact solution of Ax = b, or nullopt when b is outside the image.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const
    {
        if (static_cast<int>(b.size()) != rows_) throw input_error("solve: rhs size mismatch");
        RatMatrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[static_cast<std::size_t>(i)];
        }
        std::vector<int> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<Rational> x(static_cast<std::size_t>(cols_), Rational(0));
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), cols_);
        return x;
    }

    Rational determinant() const
    {
        if (rows_ != cols_) throw input_error("determinant of non-square matrix");
        RatMatrix m = *this;
        Rational det(1);
        for (int col = 0; col < cols_; ++col) {
            int pr = -1;
            for (int i = col; i < rows_; ++i)
                if (m.at(i, col) != 0) { pr = i; break; }
            if (pr < 0) return Rational(0);
            if (pr != col) {
                m.swap_rows(pr, col);
                det = -det;
            }
            det *= m.at(col, col);
            Rational inv = Rational(1) / m.at(col, col);
            for (int i = col + 1; i < rows_; ++i) {
                if (m.at(i, col) == 0) continue;
                Rational f = m.at(i, col) * inv;
                for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
            }
        }
        return det;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                if (j) os << " ";
                os << at(i, j).get_str();
            }
            os << "\n";
        }
        return os.str();
    }

private:
    void swap_rows(int a, int b)
    {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    int rows_, cols_;
    std::vector<Rational> data_;
};

// n x n rational matrix read either as the linear map x -> Ax or as the
// linear vector field (Ax)^i d/dx_i.
class LinearEndo {
public:
    LinearEndo() = default;
    explicit LinearEndo(RatMatrix m) : matrix_(std::move(m))
    {
        if (matrix_.rows() != matrix_.cols()) throw input_error("LinearEndo must be square");
    }

    static LinearEndo identity(int n) { return LinearEndo(RatMatrix::identity(n)); }

    static LinearEndo scaling(int n, const Rational& s)
    {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = s;
        return LinearEndo(m);
    }

    int dim() const { return matrix_.rows(); }
    const RatMatrix& matrix() const { return matrix_; }
    RatMatrix& matrix() { return matrix_; }

    bool operator==(const LinearEndo& o) const = default;

    friend LinearEndo operator*(const LinearEndo& a, const LinearEndo& b)
    {
        return LinearEndo(a.matrix_ * b.matrix_);
    }

    // Row i of A as the linear polynomial (Ax)^i.
    Polynomial row_polynomial(int i) const
    {
        Polynomial p(dim());
        for (int j = 0; j < dim(); ++j)
            if (matrix_.at(i, j) != 0) p += Polynomial::variable(dim(), j, matrix_.at(i, j));
        return p;
    }

    KVector vector_field() const
    {
        KVector X(dim(), 1);
        for (int i = 0; i < dim(); ++i) X.add_term(MultiIndex::single(i), row_polynomial(i));
        return X;
    }

private:
    RatMatrix matrix_;
};

} // namespace msym
