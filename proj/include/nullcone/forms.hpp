#pragma once

#include "nullcone/rng.hpp"
#include "nullcone/subspace.hpp"

namespace nullcone {

enum class FormKind { symmetric, symplectic };

/// Nondegenerate bilinear form: symmetric Gram for the orthogonal case,
/// antisymmetric Gram (even dimension) for the symplectic case.
class BilinearForm {
public:
    BilinearForm(FormKind kind, ExactMatrix gram);

    FormKind kind() const { return kind_; }
    const ExactMatrix& gram() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
        return a.kind_ == b.kind_ && a.gram_ == b.gram_;
    }

private:
    FormKind kind_;
    ExactMatrix gram_;
};

/// A vector space together with its bilinear form.
class FormedSpace {
public:
    explicit FormedSpace(BilinearForm form) : form_(std::move(form)) {}

    std::size_t dim() const { return form_.dim(); }
    FormKind kind() const { return form_.kind(); }
    const BilinearForm& form() const { return form_; }
    const ExactMatrix& gram() const { return form_.gram(); }

private:
    BilinearForm form_;
};

/// Identity Gram (symmetric) or the standard block matrix J (symplectic).
BilinearForm standard_form(FormKind kind, std::size_t n);
FormedSpace standard_space(FormKind kind, std::size_t n);

/// u^t * gram * v for column vectors u, v.
GaussianRational form_eval(const FormedSpace& space, const ExactMatrix& u, const ExactMatrix& v);

/// g^t * gram * g == gram.
bool is_isometry(const FormedSpace& space, const ExactMatrix& g);

/// x^t * gram + gram * x == 0 (infinitesimal isometry).
bool in_lie_algebra(const FormedSpace& space, const ExactMatrix& x);

/// Random Lie algebra element with small exact entries.
ExactMatrix sample_lie_algebra(const FormedSpace& space, SplitRng& rng);

/// Cayley transform (I - x)(I + x)^-1; nullopt if I + x is singular.
std::optional<ExactMatrix> cayley_transform(const ExactMatrix& x);

enum class DetSign { plus, minus, any };

/// Exact random isometry: Cayley transform of a random Lie algebra element,
/// optionally composed with a Gram-preserving reflection to flip det.
ExactMatrix sample_isometry(const FormedSpace& space, SplitRng& rng,
                            DetSign det_sign = DetSign::plus);

/// Reflection along v (requires (v,v) != 0, symmetric kind): det -1 isometry.
ExactMatrix reflection_along(const FormedSpace& space, const ExactMatrix& v);

/// The unique t* with (t w, v)_target = (w, t* v)_source for all w, v;
/// t maps source -> target (rows = target.dim, cols = source.dim).
ExactMatrix adjoint(const ExactMatrix& t, const FormedSpace& source, const FormedSpace& target);

} // namespace nullcone
