#include "liealg/bilinear_form.hpp"

#include "liealg/errors.hpp"

namespace liealg {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram))
{
    if (!gram_.square()) throw InvalidInput("bilinear form matrix must be square");
    gram_.check_uniform_field();
    if (!gram_.is_symmetric()) throw InvalidInput("bilinear form matrix must be symmetric");
}

BilinearForm BilinearForm::zero(const FieldDesc& field, std::size_t dim)
{
    return BilinearForm(Matrix(field, dim, dim));
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const
{
    if (x.size() != dim() || y.size() != dim()) throw ShapeError("bilinear form argument length mismatch");
    Scalar s = Scalar::zero(field());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!y[j].is_zero() && !gram_(i, j).is_zero()) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
}

bool BilinearForm::is_nondegenerate() const { return !det(gram_).is_zero(); }

Matrix BilinearForm::restricted_gram(const Subspace& s) const
{
    if (s.ambient_dim() != dim()) throw ShapeError("subspace does not live in the form's space");
    auto basis = s.basis_vectors();
    Matrix g(field(), basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) g(a, b) = (*this)(basis[a], basis[b]);
    return g;
}

BilinearForm orthogonal_sum(const BilinearForm& a, const BilinearForm& b)
{
    if (!(a.field() == b.field())) throw FieldMismatch("orthogonal sum over different fields");
    Matrix g(a.field(), a.dim() + b.dim(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) g(i, j) = a.entry(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.entry(i, j);
    return BilinearForm(std::move(g));
}

} // namespace liealg
