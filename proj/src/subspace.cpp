#include "nullcone/subspace.hpp"

namespace nullcone {

Subspace Subspace::span_of(std::size_t ambient_dim, const ExactMatrix& spanning) {
    if (spanning.cols() > 0 && spanning.rows() != ambient_dim) {
        throw DimensionError("spanning matrix rows do not match ambient dimension");
    }
    if (spanning.cols() == 0) return {ambient_dim, ExactMatrix(ambient_dim, 0)};
    // Reduced column echelon form = transposed RREF of the transpose with
    // zero rows dropped; unique for the column span.
    std::vector<std::size_t> pivots;
    ExactMatrix r = rref(spanning.transpose(), &pivots);
    ExactMatrix basis(ambient_dim, pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        for (std::size_t i = 0; i < ambient_dim; ++i) basis.at(i, j) = r.at(j, i);
    }
    return {ambient_dim, std::move(basis)};
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    return {ambient_dim, ExactMatrix(ambient_dim, 0)};
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return {ambient_dim, ExactMatrix::identity(ambient_dim)};
}

bool Subspace::contains(const ExactMatrix& vec) const {
    if (vec.rows() != ambient_ || vec.cols() != 1) {
        throw DimensionError("vector shape does not match ambient dimension");
    }
    if (dim() == 0) return vec.is_zero();
    return rank(hstack(basis_, vec)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
    if (other.dim() == 0) return true;
    if (other.dim() > dim()) return false;
    return rank(hstack(basis_, other.basis_)) == dim();
}

Subspace column_space(const ExactMatrix& m) {
    return Subspace::span_of(m.rows(), m);
}

Subspace kernel(const ExactMatrix& m) {
    return Subspace::span_of(m.cols(), kernel_basis(m));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("ambient dimension mismatch");
    if (u.dim() == 0) return v;
    if (v.dim() == 0) return u;
    return Subspace::span_of(u.ambient_dim(), hstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("ambient dimension mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambient_dim());
    // Solutions of u*x = v*y give the intersection as u * x-block.
    ExactMatrix paired = kernel_basis(hstack(u.basis(), -v.basis()));
    ExactMatrix x_block(u.dim(), paired.cols());
    for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < paired.cols(); ++c) x_block.at(r, c) = paired.at(r, c);
    }
    return Subspace::span_of(u.ambient_dim(), matmul(u.basis(), x_block));
}

bool subspace_contains(const Subspace& u, const Subspace& v) {
    return u.contains(v);
}

} // namespace nullcone
