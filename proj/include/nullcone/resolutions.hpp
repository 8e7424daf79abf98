#pragma once

#include "nullcone/nullcone.hpp"

namespace nullcone {

/// The four resolution spaces: nc0 over the isotropic family J_r, nc over
/// the two-step flag family, nc1 over the m-plane family, nc2 over the
/// (n-s)-plane family.
enum class Variant { nc0, nc, nc1, nc2 };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);

/// Point of the resolution over the orthogonal/symplectic null cone:
/// a null t together with an r-dimensional isotropic u containing Im t.
class ResolutionPointOS {
public:
    ResolutionPointOS(const OrthSympSetting& setting, ExactMatrix t, IsotropicSubspace u);

    const ExactMatrix& t() const { return t_; }
    const IsotropicSubspace& u() const { return u_; }

    friend bool operator==(const ResolutionPointOS& a, const ResolutionPointOS& b) {
        return a.t_ == b.t_ && a.u_ == b.u_;
    }

private:
    ExactMatrix t_;
    IsotropicSubspace u_;
};

/// Point of the flag resolution: a null pair with Im b <= u1 <= u2 <= ker a,
/// dim u1 = m, dim u2 = n - s.
class ResolutionPointGL {
public:
    ResolutionPointGL(const GlSetting& setting, ExactMatrix a, ExactMatrix b, Subspace u1,
                      Subspace u2);

    const ExactMatrix& a() const { return a_; }
    const ExactMatrix& b() const { return b_; }
    const Subspace& u1() const { return u1_; }
    const Subspace& u2() const { return u2_; }

    friend bool operator==(const ResolutionPointGL& x, const ResolutionPointGL& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.u1_ == y.u1_ && x.u2_ == y.u2_;
    }

private:
    ExactMatrix a_;
    ExactMatrix b_;
    Subspace u1_;
    Subspace u2_;
};

/// One-step variants: a single u with Im b <= u <= ker a, of dimension m
/// (first kind) or n - s (second kind).
class ResolutionPointGL1 {
public:
    ResolutionPointGL1(const GlSetting& setting, ExactMatrix a, ExactMatrix b, Subspace u);

    const ExactMatrix& a() const { return a_; }
    const ExactMatrix& b() const { return b_; }
    const Subspace& u() const { return u_; }

    friend bool operator==(const ResolutionPointGL1& x, const ResolutionPointGL1& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.u_ == y.u_;
    }

private:
    ExactMatrix a_;
    ExactMatrix b_;
    Subspace u_;
};

class ResolutionPointGL2 {
public:
    ResolutionPointGL2(const GlSetting& setting, ExactMatrix a, ExactMatrix b, Subspace u);

    const ExactMatrix& a() const { return a_; }
    const ExactMatrix& b() const { return b_; }
    const Subspace& u() const { return u_; }

    friend bool operator==(const ResolutionPointGL2& x, const ResolutionPointGL2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.u_ == y.u_;
    }

private:
    ExactMatrix a_;
    ExactMatrix b_;
    Subspace u_;
};

/// Forgetful projections onto the null cone.
const ExactMatrix& mu(const ResolutionPointOS& p);
GlNullPair mu(const ResolutionPointGL& p);
GlNullPair mu(const ResolutionPointGL1& p);
GlNullPair mu(const ResolutionPointGL2& p);

/// Unique preimages over the maximal-rank locus; a rank-deficient input
/// raises NotUniqueError (its fiber witnesses are available separately).
ResolutionPointOS unique_preimage(const OrthSympSetting& setting, const ExactMatrix& t);
ResolutionPointGL unique_preimage(const GlSetting& setting, const ExactMatrix& a,
                                  const ExactMatrix& b);
ResolutionPointGL1 unique_preimage_gl1(const GlSetting& setting, const ExactMatrix& a,
                                       const ExactMatrix& b);
ResolutionPointGL2 unique_preimage_gl2(const GlSetting& setting, const ExactMatrix& a,
                                       const ExactMatrix& b);

/// Two distinct points in the fiber of the projection over a deficient
/// point; InvalidRequest when the fiber has no freedom.
std::pair<ResolutionPointOS, ResolutionPointOS> fiber_witnesses(const OrthSympSetting& setting,
                                                                const ExactMatrix& t);
std::pair<ResolutionPointGL, ResolutionPointGL> fiber_witnesses(const GlSetting& setting,
                                                                const ExactMatrix& a,
                                                                const ExactMatrix& b);
std::pair<ResolutionPointGL1, ResolutionPointGL1> fiber_witnesses_gl1(const GlSetting& setting,
                                                                      const ExactMatrix& a,
                                                                      const ExactMatrix& b);
std::pair<ResolutionPointGL2, ResolutionPointGL2> fiber_witnesses_gl2(const GlSetting& setting,
                                                                      const ExactMatrix& a,
                                                                      const ExactMatrix& b);

/// Fiber dimensions of the bundle projections onto their base families.
std::size_t fiber_dim(const OrthSympSetting& setting);
std::size_t fiber_dim(Variant variant, const GlSetting& setting);

/// Base + fiber dimension of each resolution space.
std::size_t dim_resolution_total(const OrthSympSetting& setting);
std::size_t dim_resolution_total(Variant variant, const GlSetting& setting);

/// Independent linear-system oracles for the fiber dimensions, evaluated
/// at concrete base points.
std::size_t fiber_dim_oracle(const OrthSympSetting& setting, const Subspace& u);
std::size_t fiber_dim_oracle(const GlSetting& setting, const Subspace& u1, const Subspace& u2);
/// dim { g : Im g <= image_bound, kernel_bound <= ker g }.
std::size_t orbit_fiber_dim_oracle(std::size_t n, const Subspace& image_bound,
                                   const Subspace& kernel_bound);

/// Standard-form space of the opposite kind in dimension m (the target-side
/// space W of the quotient construction).
FormedSpace opposite_standard_space(const OrthSympSetting& setting);

/// t |-> t t* into the Lie algebra of V; requires n >= 2m, m even in the
/// orthogonal case, and w of the opposite kind in dimension m.
ExactMatrix quotient_R(const OrthSympSetting& setting, const ExactMatrix& t,
                       const FormedSpace& w);
/// t |-> t* t into the Lie algebra of W.
ExactMatrix quotient_Qtilde(const OrthSympSetting& setting, const ExactMatrix& t,
                            const FormedSpace& w);
/// (a, b) |-> b a; requires s = m.
ExactMatrix quotient_BA(const GlSetting& setting, const ExactMatrix& a, const ExactMatrix& b);

/// Closure membership: Lie algebra element of rank <= m with isotropic image.
bool in_orbit_closure_os(const FormedSpace& space, const ExactMatrix& g, std::size_t m);
/// Closure membership: square zero and rank <= m.
bool in_orbit_closure_gl(const ExactMatrix& g, std::size_t m);

/// Orbit-side resolution points (the conjugacy-class closures).
class OrbitPointOS {
public:
    OrbitPointOS(const FormedSpace& space, std::size_t m, ExactMatrix g, IsotropicSubspace u);

    const ExactMatrix& g() const { return g_; }
    const IsotropicSubspace& u() const { return u_; }

private:
    ExactMatrix g_;
    IsotropicSubspace u_;
};

class OrbitPointGL {
public:
    OrbitPointGL(std::size_t n, std::size_t m, ExactMatrix g, Subspace u1, Subspace u2);

    const ExactMatrix& g() const { return g_; }
    const Subspace& u1() const { return u1_; }
    const Subspace& u2() const { return u2_; }

private:
    ExactMatrix g_;
    Subspace u1_;
    Subspace u2_;
};

class OrbitPointGL1 {
public:
    OrbitPointGL1(std::size_t n, std::size_t m, ExactMatrix g, Subspace u);

    const ExactMatrix& g() const { return g_; }
    const Subspace& u() const { return u_; }

private:
    ExactMatrix g_;
    Subspace u_;
};

class OrbitPointGL2 {
public:
    OrbitPointGL2(std::size_t n, std::size_t m, ExactMatrix g, Subspace u);

    const ExactMatrix& g() const { return g_; }
    const Subspace& u() const { return u_; }

private:
    ExactMatrix g_;
    Subspace u_;
};

/// Unique orbit-side preimages over the interior (rank exactly m).
OrbitPointOS orbit_unique_preimage(const FormedSpace& space, const ExactMatrix& g, std::size_t m);
OrbitPointGL orbit_unique_preimage_gl(std::size_t n, std::size_t m, const ExactMatrix& g);
OrbitPointGL1 orbit_unique_preimage_gl1(std::size_t n, std::size_t m, const ExactMatrix& g);
OrbitPointGL2 orbit_unique_preimage_gl2(std::size_t n, std::size_t m, const ExactMatrix& g);

/// Two distinct orbit-side fiber points over a rank-deficient g.
std::pair<OrbitPointOS, OrbitPointOS> orbit_fiber_witnesses(const FormedSpace& space,
                                                            const ExactMatrix& g, std::size_t m);
std::pair<OrbitPointGL1, OrbitPointGL1> orbit_fiber_witnesses_gl1(std::size_t n, std::size_t m,
                                                                  const ExactMatrix& g);

/// Random resolution points at a prescribed rank, with the base subspace
/// data sampled first so the fibered structure is retained.
ResolutionPointOS sample_resolution(const OrthSympSetting& setting, std::size_t rank,
                                    SplitRng& rng);
ResolutionPointGL sample_resolution(const GlSetting& setting, std::size_t rank_a,
                                    std::size_t rank_b, SplitRng& rng);

/// Commutativity of the quotient squares at a point: the induced orbit
/// point must be valid and both composite routes must agree exactly.
bool check_diagram(const OrthSympSetting& setting, const ResolutionPointOS& point,
                   const FormedSpace& w);
bool check_diagram(const GlSetting& setting, const ResolutionPointGL& point);
bool check_diagram(const GlSetting& setting, const ResolutionPointGL1& point);
bool check_diagram(const GlSetting& setting, const ResolutionPointGL2& point);

/// The two forgetful routes from the flag resolution agree with the direct
/// projection onto the null cone.
bool check_q_triangle(const GlSetting& setting, const ResolutionPointGL& point);

/// For g in the Lie algebra with isotropic image inside u: g kills u and
/// squares to zero. Evaluates the conclusion (no precondition enforcement,
/// so violated hypotheses can be probed as negative controls).
bool f0_nilpotency_check(const FormedSpace& space, const ExactMatrix& g,
                         const IsotropicSubspace& u);

/// Component of an interior orbit point in the very even case (orthogonal,
/// n = 2m, rank g = m).
ComponentLabel very_even_split(const FormedSpace& space, const ExactMatrix& g, std::size_t m,
                               const IsotropicSubspace& reference);

} // namespace nullcone
