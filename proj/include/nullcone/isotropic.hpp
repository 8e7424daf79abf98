#pragma once

#include <utility>

#include "nullcone/forms.hpp"

namespace nullcone {

/// A subspace on which the ambient bilinear form vanishes identically.
class IsotropicSubspace {
public:
    IsotropicSubspace(FormedSpace space, Subspace sub);

    const FormedSpace& space() const { return space_; }
    const Subspace& sub() const { return sub_; }
    std::size_t dim() const { return sub_.dim(); }

    friend bool operator==(const IsotropicSubspace& a, const IsotropicSubspace& b) {
        return a.space_.form() == b.space_.form() && a.sub_ == b.sub_;
    }

private:
    FormedSpace space_;
    Subspace sub_;
};

/// Two-step flag u1 of dimension d1 inside u2 of dimension d2.
class Flag2 {
public:
    Flag2(Subspace u1, Subspace u2);

    std::size_t ambient_dim() const { return u1_.ambient_dim(); }
    const Subspace& u1() const { return u1_; }
    const Subspace& u2() const { return u2_; }

private:
    Subspace u1_;
    Subspace u2_;
};

bool is_isotropic(const FormedSpace& space, const Subspace& sub);

/// floor(n/2): the largest dimension of an isotropic subspace.
std::size_t max_isotropic_dim(const FormedSpace& space);

/// Dimension of the variety of r-dimensional isotropic subspaces,
/// per kind: r(2n-3r-1)/2 (symmetric), r(2n-3r+1)/2 (symplectic).
std::size_t dim_isotropic_grassmannian(std::size_t n, std::size_t r, FormKind kind);

/// The symmetric-case closed form r(2n-3r-1)/2 applied as-is; kept so the
/// symplectic discrepancy against the tangent oracle stays reportable.
long long isotropic_dim_uniform_formula(std::size_t n, std::size_t r);

/// Independent first-order oracle: dimension of the space of isotropic
/// deformations of u, minus the r^2 basis-reparametrization gauge.
std::size_t tangent_dim_isotropic_at(const IsotropicSubspace& u);

/// k-th hyperbolic seed pair (s, s') of the standard form: isotropic
/// vectors with (s, s') = 1, orthogonal to every other seed pair.
std::pair<ExactMatrix, ExactMatrix> hyperbolic_seed_pair(const FormedSpace& space, std::size_t k);

/// span{s_0, ..., s_{r-1}} for the standard forms.
Subspace standard_isotropic_seed(const FormedSpace& space, std::size_t r);

IsotropicSubspace sample_isotropic(const FormedSpace& space, std::size_t r, SplitRng& rng);

std::size_t dim_grassmannian(std::size_t k, std::size_t n);
std::size_t dim_flag2(std::size_t m, std::size_t s, std::size_t n);

Flag2 sample_flag2(std::size_t n, std::size_t d1, std::size_t d2, SplitRng& rng);

enum class ComponentLabel { plus, minus };

char component_label_char(ComponentLabel label);

/// Which of the two components of the maximal isotropic family u lies in
/// (orthogonal case, n = 2 dim u): parity of codim of the intersection
/// with the fixed reference.
ComponentLabel component_label(const IsotropicSubspace& u, const IsotropicSubspace& reference);

/// Ambient isometry carrying the line [x] to the line [y]; x, y isotropic
/// and nonzero. When (x, y) = 0 the route passes through an auxiliary
/// isotropic vector searched inside the column space of `candidates`.
ExactMatrix isometry_moving_line(const FormedSpace& space, const ExactMatrix& x,
                                 const ExactMatrix& y, const ExactMatrix& candidates);

/// Ambient isometry g with g(u0) = span of the first dim(u0) seed vectors.
ExactMatrix steer_to_seed(const FormedSpace& space, const Subspace& u0);

/// One isotropic r-dimensional extension of u0, and two distinct ones.
Subspace extend_isotropic(const FormedSpace& space, const Subspace& u0, std::size_t r);
std::pair<Subspace, Subspace> extend_isotropic_two_ways(const FormedSpace& space,
                                                        const Subspace& u0, std::size_t r);

} // namespace nullcone
