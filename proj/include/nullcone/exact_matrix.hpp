#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "nullcone/gaussian_rational.hpp"

namespace nullcone {

/// Dense matrix over Q(i), row-major. Library operations treat matrices as
/// immutable values and return fresh results.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Builds from nested braces; rows must have equal length.
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// n x 1 column with a single 1 at position `index`.
    static ExactMatrix basis_vector(std::size_t n, std::size_t index);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const GaussianRational& at(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    GaussianRational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    ExactMatrix transpose() const;
    ExactMatrix operator-() const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix column(std::size_t c) const;
    /// Columns `first..first+count-1` as a new matrix.
    ExactMatrix columns(std::size_t first, std::size_t count) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GaussianRational> entries_;
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

/// Exact rank via fraction-free (Bareiss-style) elimination.
std::size_t rank(const ExactMatrix& m);

GaussianRational determinant(const ExactMatrix& m);

/// Inverse of a square matrix; nullopt if singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Unique reduced row echelon form (pivots 1, zeros above and below,
/// pivot columns strictly increasing). Also reports the pivot columns.
ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

/// cols(m) x k matrix whose columns form a basis of the null space of m.
ExactMatrix kernel_basis(const ExactMatrix& m);

/// Solves a * x = b exactly; nullopt if inconsistent. When the system is
/// underdetermined an arbitrary particular solution is returned.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

} // namespace nullcone
