#include "nullcone/forms.hpp"

namespace nullcone {

namespace {

constexpr int kMaxRejects = 64;

} // namespace

BilinearForm::BilinearForm(FormKind kind, ExactMatrix gram)
    : kind_(kind), gram_(std::move(gram)) {
    if (!gram_.is_square()) throw DimensionError("Gram matrix must be square");
    if (kind_ == FormKind::symplectic && gram_.rows() % 2 != 0) {
        throw ParityError("symplectic form needs even dimension");
    }
    const ExactMatrix gt = gram_.transpose();
    if (kind_ == FormKind::symmetric && gt != gram_) {
        throw InvalidRequest("symmetric form needs a symmetric Gram matrix");
    }
    if (kind_ == FormKind::symplectic && gt != -gram_) {
        throw InvalidRequest("symplectic form needs an antisymmetric Gram matrix");
    }
    if (gram_.rows() > 0 && rank(gram_) < gram_.rows()) {
        throw InvalidRequest("Gram matrix must be nondegenerate");
    }
}

BilinearForm standard_form(FormKind kind, std::size_t n) {
    if (kind == FormKind::symmetric) {
        return {kind, ExactMatrix::identity(n)};
    }
    if (n % 2 != 0) throw ParityError("symplectic form needs even dimension");
    const std::size_t p = n / 2;
    ExactMatrix j(n, n);
    for (std::size_t k = 0; k < p; ++k) {
        j.at(k, p + k) = GaussianRational(1);
        j.at(p + k, k) = GaussianRational(-1);
    }
    return {kind, std::move(j)};
}

FormedSpace standard_space(FormKind kind, std::size_t n) {
    return FormedSpace(standard_form(kind, n));
}

GaussianRational form_eval(const FormedSpace& space, const ExactMatrix& u, const ExactMatrix& v) {
    if (u.rows() != space.dim() || u.cols() != 1 || v.rows() != space.dim() || v.cols() != 1) {
        throw DimensionError("form_eval expects column vectors of the space dimension");
    }
    return matmul(u.transpose(), matmul(space.gram(), v)).at(0, 0);
}

bool is_isometry(const FormedSpace& space, const ExactMatrix& g) {
    if (g.rows() != space.dim() || g.cols() != space.dim()) {
        throw DimensionError("isometry candidate has wrong shape");
    }
    return matmul(g.transpose(), matmul(space.gram(), g)) == space.gram();
}

bool in_lie_algebra(const FormedSpace& space, const ExactMatrix& x) {
    if (x.rows() != space.dim() || x.cols() != space.dim()) {
        throw DimensionError("Lie algebra candidate has wrong shape");
    }
    return (matmul(x.transpose(), space.gram()) + matmul(space.gram(), x)).is_zero();
}

ExactMatrix sample_lie_algebra(const FormedSpace& space, SplitRng& rng) {
    // x = gram^-1 * s where s is skew (symmetric kind) or symmetric
    // (symplectic kind); then x^t*gram + gram*x = s^t -/+ ... = 0.
    const std::size_t n = space.dim();
    const std::int64_t den = rng.uniform(1, 3);
    ExactMatrix s(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            if (r == c) {
                s.at(r, c) = space.kind() == FormKind::symmetric ? GaussianRational(0)
                                                                 : random_scalar(rng, den);
                continue;
            }
            GaussianRational v = random_scalar(rng, den);
            s.at(r, c) = v;
            s.at(c, r) = space.kind() == FormKind::symmetric ? -v : v;
        }
    }
    auto gram_inv = inverse(space.gram());
    ExactMatrix x = matmul(*gram_inv, s);
    return x;
}

std::optional<ExactMatrix> cayley_transform(const ExactMatrix& x) {
    if (!x.is_square()) throw DimensionError("Cayley transform of a non-square matrix");
    const ExactMatrix id = ExactMatrix::identity(x.rows());
    auto inv = inverse(id + x);
    if (!inv) return std::nullopt;
    return matmul(id - x, *inv);
}

ExactMatrix reflection_along(const FormedSpace& space, const ExactMatrix& v) {
    if (space.kind() != FormKind::symmetric) {
        throw InvalidRequest("reflections require the symmetric kind");
    }
    GaussianRational q = form_eval(space, v, v);
    if (q.is_zero()) throw InvalidRequest("reflection axis must be non-isotropic");
    // I - 2 v v^t G / (v,v); fixes v^perp, negates v, preserves the form.
    ExactMatrix outer = matmul(v, matmul(v.transpose(), space.gram()));
    return ExactMatrix::identity(space.dim()) - ((GaussianRational(2) / q) * outer);
}

ExactMatrix sample_isometry(const FormedSpace& space, SplitRng& rng, DetSign det_sign) {
    if (det_sign == DetSign::minus && space.kind() == FormKind::symplectic) {
        throw InvalidRequest("symplectic isometries all have determinant 1");
    }
    ExactMatrix g(0, 0);
    bool found = false;
    for (int attempt = 0; attempt < kMaxRejects && !found; ++attempt) {
        ExactMatrix x = sample_lie_algebra(space, rng);
        auto c = cayley_transform(x);
        if (!c) continue;
        g = std::move(*c);
        found = true;
    }
    if (!found) throw SampleError("Cayley sampling kept hitting singular I + x");

    bool flip = false;
    if (space.kind() == FormKind::symmetric) {
        if (det_sign == DetSign::minus) flip = true;
        if (det_sign == DetSign::any) flip = rng.uniform(0, 1) == 1;
    }
    if (flip) {
        // Find an anisotropic axis among e_i, then e_i + e_j.
        const std::size_t n = space.dim();
        std::optional<ExactMatrix> axis;
        for (std::size_t i = 0; i < n && !axis; ++i) {
            ExactMatrix e = ExactMatrix::basis_vector(n, i);
            if (!form_eval(space, e, e).is_zero()) axis = e;
        }
        for (std::size_t i = 0; i < n && !axis; ++i) {
            for (std::size_t j = i + 1; j < n && !axis; ++j) {
                ExactMatrix e = ExactMatrix::basis_vector(n, i) + ExactMatrix::basis_vector(n, j);
                if (!form_eval(space, e, e).is_zero()) axis = e;
            }
        }
        if (!axis) throw SampleError("no anisotropic axis found for the reflection");
        g = matmul(g, reflection_along(space, *axis));
    }
    return g;
}

ExactMatrix adjoint(const ExactMatrix& t, const FormedSpace& source, const FormedSpace& target) {
    if (t.rows() != target.dim() || t.cols() != source.dim()) {
        throw DimensionError("adjoint expects t mapping source into target");
    }
    // Substituting bases into (t w, v)_target = (w, t* v)_source gives
    // t^t G_target = G_source t*, so t* = G_source^-1 t^t G_target.
    auto gs_inv = inverse(source.gram());
    return matmul(*gs_inv, matmul(t.transpose(), target.gram()));
}

} // namespace nullcone
