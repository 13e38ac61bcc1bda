#ifndef LIEALG_LIE_ALGEBRA_HPP
#define LIEALG_LIE_ALGEBRA_HPP

#include "liealg/bilinear_form.hpp"
#include "liealg/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

/// One coefficient of a basis bracket: c * x_k.
struct Term {
    std::size_t k;
    Scalar c;
    friend bool operator==(const Term&, const Term&) = default;
};

/// [x_i, x_j] = sum of terms.
struct BracketRecord {
    std::size_t i;
    std::size_t j;
    std::vector<Term> terms;
};

/*
 * Finite-dimensional algebra given by structure constants c_ij^k.
 *
 * Only pairs i < j are stored; c_ji^k = -c_ij^k and c_ii^k = 0 follow from
 * the representation, so antisymmetry cannot be violated. The Jacobi
 * identity is *not* assumed: check_jacobi decides it.
 *
 * The table is normalised on construction (terms sorted by k, zero
 * coefficients and empty records dropped), which makes equality of two
 * LieAlgebra values a structural comparison.
 */
class LieAlgebra {
public:
    using Table = std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>;

    LieAlgebra() = default;
    /// Records with i > j are stored negated; records with i == j must be
    /// zero. Repeated (pair, k) entries are summed.
    LieAlgebra(const FieldDesc& field, std::size_t dim, const std::vector<BracketRecord>& brackets,
               std::vector<std::string> labels = {}, std::optional<std::vector<std::int64_t>> grading = {});

    static LieAlgebra abelian(const FieldDesc& field, std::size_t dim);

    std::size_t dim() const { return dim_; }
    const FieldDesc& field() const { return field_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<std::vector<std::int64_t>>& grading() const { return grading_; }
    const Table& table() const { return table_; }
    std::vector<BracketRecord> records() const;

    /// Coordinates of [x_i, x_j].
    Vector basis_bracket(std::size_t i, std::size_t j) const;
    Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
    bool is_abelian() const { return table_.empty(); }

    LieAlgebra with_labels(std::vector<std::string> labels) const;
    LieAlgebra with_grading(std::optional<std::vector<std::int64_t>> grading) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    FieldDesc field_;
    std::size_t dim_ = 0;
    Table table_;
    std::vector<std::string> labels_;
    std::optional<std::vector<std::int64_t>> grading_;
};

/// Equal dimension, field and structure constants; labels and grading ignored.
bool same_structure(const LieAlgebra& a, const LieAlgebra& b);

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);
/// sum_a x_a [e_a, e_k]
Vector bracket_with_basis(const LieAlgebra& L, const Vector& x, std::size_t k);

struct JacobiWitness {
    std::size_t i, j, k;
    Vector defect; // [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]
};

/// First failing basis triple i < j < k in lexicographic order.
std::optional<JacobiWitness> check_jacobi(const LieAlgebra& L);

/// Linear endomorphism; column c holds the image of basis vector c.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(Matrix m);
    static LinearMap identity(const FieldDesc& field, std::size_t dim);

    const Matrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }
    Vector operator()(const Vector& v) const { return m_.apply(v); }
    Subspace image(const Subspace& s) const;

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    Matrix m_;
};

/// y -> [x, y]
LinearMap adjoint(const LieAlgebra& L, const Vector& x);
BilinearForm killing_form(const LieAlgebra& L);

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

/// L, [L,L], ... until two consecutive terms agree (the stable term appears once).
std::vector<Subspace> derived_series(const LieAlgebra& L);
/// L, [L,L], [L,[L,L]], ... until stable.
std::vector<Subspace> lower_central_series(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);

bool is_ideal(const LieAlgebra& L, const Subspace& s);
bool is_subalgebra(const LieAlgebra& L, const Subspace& s);

/// L / J on the basis {x_q + J : q non-pivot column of J}. Throws NotAnIdeal.
LieAlgebra quotient(const LieAlgebra& L, const Subspace& j);
/// Coordinates of v + J in the quotient basis used by quotient().
Vector quotient_coordinates(const Subspace& j, const Vector& v);

bool is_automorphism(const LieAlgebra& L, const LinearMap& phi);

struct DerivationSpace {
    Subspace all; // inside F^(dim*dim); coordinate r*dim + c is D(r, c)
    std::size_t inner_dim = 0;
    std::size_t outer_dim = 0;
};

DerivationSpace derivation_space(const LieAlgebra& L);

struct GradingViolation {
    std::size_t i, j, k;
};

std::optional<GradingViolation> grading_violation(const LieAlgebra& L, const std::vector<std::int64_t>& degrees);
bool check_grading(const LieAlgebra& L, const std::vector<std::int64_t>& degrees);

/// Basis of a followed by basis of b.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

} // namespace liealg

#endif // LIEALG_LIE_ALGEBRA_HPP
