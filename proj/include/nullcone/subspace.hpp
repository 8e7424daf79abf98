#pragma once

#include "nullcone/exact_matrix.hpp"

namespace nullcone {

/// A linear subspace of Q(i)^n in reduced column echelon canonical form.
/// The canonical basis is unique, so two Subspace values are equal as
/// values iff they are equal as sets of vectors.
class Subspace {
public:
    /// Canonicalizes the span of the columns of `spanning`.
    static Subspace span_of(std::size_t ambient_dim, const ExactMatrix& spanning);
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    /// ambient_dim x dim canonical basis matrix (full column rank).
    const ExactMatrix& basis() const { return basis_; }

    bool contains(const ExactMatrix& vec) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, ExactMatrix basis)
        : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    ExactMatrix basis_;
};

Subspace column_space(const ExactMatrix& m);
Subspace kernel(const ExactMatrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// True iff v is contained in u.
bool subspace_contains(const Subspace& u, const Subspace& v);

} // namespace nullcone
