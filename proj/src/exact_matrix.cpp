#include "nullcone/exact_matrix.hpp"

#include <utility>

namespace nullcone {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged initializer rows");
        for (const auto& e : row) entries_.push_back(e);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::basis_vector(std::size_t n, std::size_t index) {
    if (index >= n) throw DimensionError("basis vector index out of range");
    ExactMatrix v(n, 1);
    v.at(index, 0) = GaussianRational(1);
    return v;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    }
    return t;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("sum shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("difference shape mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    return matmul(a, b);
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& m) {
    ExactMatrix out = m;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) *= s;
    }
    return out;
}

ExactMatrix ExactMatrix::column(std::size_t c) const {
    return columns(c, 1);
}

ExactMatrix ExactMatrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionError("column slice out of range");
    ExactMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) out.at(r, c) = at(r, first + c);
    }
    return out;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("product shape mismatch");
    ExactMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    ExactMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    ExactMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
    }
    return out;
}

namespace {

struct Echelon {
    ExactMatrix mat;
    std::vector<std::size_t> pivot_cols;
    bool swap_parity_odd = false;
};

// Fraction-free forward elimination (Bareiss updates, first-nonzero pivoting).
// Rows below each pivot are zeroed; surviving entries stay division-exact.
Echelon bareiss_forward(ExactMatrix w) {
    Echelon ech{std::move(w), {}, false};
    ExactMatrix& m = ech.mat;
    GaussianRational prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m.rows() && m.at(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != row) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(pivot_row, c), m.at(row, c));
            ech.swap_parity_odd = !ech.swap_parity_odd;
        }
        const GaussianRational pivot = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            const GaussianRational factor = m.at(i, col);
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                m.at(i, j) = (m.at(i, j) * pivot - factor * m.at(row, j)) / prev;
            }
            m.at(i, col) = GaussianRational(0);
        }
        prev = pivot;
        ech.pivot_cols.push_back(col);
        ++row;
    }
    return ech;
}

} // namespace

std::size_t rank(const ExactMatrix& m) {
    if (m.empty()) return 0;
    return bareiss_forward(m).pivot_cols.size();
}

GaussianRational determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return GaussianRational(1);
    Echelon ech = bareiss_forward(m);
    if (ech.pivot_cols.size() < m.rows()) return GaussianRational(0);
    // After a full fraction-free sweep the last pivot equals det up to swaps.
    GaussianRational det = ech.mat.at(m.rows() - 1, m.cols() - 1);
    return ech.swap_parity_odd ? -det : det;
}

ExactMatrix rref(const ExactMatrix& m, std::vector<std::size_t>* pivot_cols) {
    Echelon ech = bareiss_forward(m);
    ExactMatrix& w = ech.mat;
    const auto& pivots = ech.pivot_cols;
    // Normalize pivots to 1, then eliminate above each pivot.
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const GaussianRational inv = GaussianRational(1) / w.at(r, pivots[r]);
        for (std::size_t c = pivots[r]; c < w.cols(); ++c) w.at(r, c) *= inv;
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        for (std::size_t above = 0; above < r; ++above) {
            const GaussianRational factor = w.at(above, pivots[r]);
            if (factor.is_zero()) continue;
            for (std::size_t c = pivots[r]; c < w.cols(); ++c) {
                w.at(above, c) -= factor * w.at(r, c);
            }
        }
    }
    if (pivot_cols) *pivot_cols = pivots;
    return w;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
    if (m.cols() == 0) return {0, 0};
    if (m.rows() == 0) return ExactMatrix::identity(m.cols());
    std::vector<std::size_t> pivots;
    ExactMatrix r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    const std::size_t free_count = m.cols() - pivots.size();
    ExactMatrix out(m.cols(), free_count);
    std::size_t k = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        out.at(f, k) = GaussianRational(1);
        for (std::size_t j = 0; j < pivots.size(); ++j) {
            out.at(pivots[j], k) = -r.at(j, f);
        }
        ++k;
    }
    return out;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve shape mismatch");
    std::vector<std::size_t> pivots;
    ExactMatrix r = rref(hstack(a, b), &pivots);
    for (std::size_t p : pivots) {
        if (p >= a.cols()) return std::nullopt;
    }
    ExactMatrix x(a.cols(), b.cols());
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        for (std::size_t k = 0; k < b.cols(); ++k) {
            x.at(pivots[j], k) = r.at(j, a.cols() + k);
        }
    }
    return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    if (rank(m) < m.rows()) return std::nullopt;
    return solve(m, ExactMatrix::identity(m.rows()));
}

} // namespace nullcone
