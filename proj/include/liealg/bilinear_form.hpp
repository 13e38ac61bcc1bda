#ifndef LIEALG_BILINEAR_FORM_HPP
#define LIEALG_BILINEAR_FORM_HPP

#include "liealg/linalg.hpp"

namespace liealg {

/// Symmetric bilinear form given by its Gram matrix in the working basis.
class BilinearForm {
public:
    BilinearForm() = default;
    /// Throws InvalidInput unless `gram` is square and exactly symmetric.
    explicit BilinearForm(Matrix gram);

    static BilinearForm zero(const FieldDesc& field, std::size_t dim);

    const Matrix& matrix() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }
    const FieldDesc& field() const { return gram_.field(); }

    const Scalar& entry(std::size_t i, std::size_t j) const { return gram_(i, j); }
    Scalar operator()(const Vector& x, const Vector& y) const;

    bool is_nondegenerate() const;
    /// Gram matrix of the restriction to S in S's canonical basis.
    Matrix restricted_gram(const Subspace& s) const;

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
    Matrix gram_;
};

/// Block-diagonal form on the direct sum.
BilinearForm orthogonal_sum(const BilinearForm& a, const BilinearForm& b);

} // namespace liealg

#endif // LIEALG_BILINEAR_FORM_HPP
