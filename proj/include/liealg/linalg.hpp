#ifndef LIEALG_LINALG_HPP
#define LIEALG_LINALG_HPP

#include "liealg/matrix.hpp"

#include <optional>
#include <vector>

namespace liealg {

/*
 * Exact Gauss-Jordan elimination over Q and F_p.
 *
 * Pivots are normalised to 1 and cleared above and below, so the reduced
 * matrix is the unique reduced row-echelon form of the row space. Every
 * canonical representation in the library (Subspace bases, solver output)
 * derives from this convention.
 *
 * All routines throw FieldMismatch for matrices with entries over mixed
 * fields and UnsupportedField over residue rings that are not fields.
 */

struct RrefResult {
    Matrix reduced;                  // same shape as the input
    std::vector<std::size_t> pivots; // pivot column of row r, ascending
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Throws ShapeError for non-square input.
Scalar det(const Matrix& m);

/// One solution of m x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws InvalidInput for singular or non-square input.
Matrix inverse(const Matrix& m);

/// Row echelon basis grown one equation at a time; dependent rows are
/// discarded on arrival, so memory stays at rank x cols.
class RowAccumulator {
public:
    RowAccumulator(const FieldDesc& field, std::size_t cols) : field_(field), cols_(cols) {}

    /// Returns true when the row was independent of those already held.
    bool add(Vector row);
    std::size_t rank() const { return rows_.size(); }
    Matrix matrix() const { return Matrix::from_vectors(field_, cols_, rows_); }

private:
    FieldDesc field_;
    std::size_t cols_;
    std::vector<Vector> rows_;         // sorted by pivot
    std::vector<std::size_t> pivots_;
};

/// Linear subspace of F^n held as the nonzero rows of its RREF basis matrix.
/// Equal subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;

    static Subspace span(const FieldDesc& field, std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace zero(const FieldDesc& field, std::size_t ambient);
    static Subspace whole(const FieldDesc& field, std::size_t ambient);
    /// span{e_i : i in indices}
    static Subspace coordinate(const FieldDesc& field, std::size_t ambient, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const FieldDesc& field() const { return basis_.field(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t r) const { return basis_.row(r); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Ascending column indices that are not pivots; they coordinatise the
    /// quotient F^n / S.
    std::vector<std::size_t> non_pivots() const;

    /// v minus the element of S that agrees with v on the pivot columns.
    /// The result vanishes on pivots and is zero iff v lies in S.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    Subspace operator+(const Subspace& other) const;

    /// Index set when S is spanned by standard basis vectors.
    std::optional<std::vector<std::size_t>> coordinate_indices() const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots))
    {
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0} in canonical form; dim = cols - rank.
Subspace nullspace(const Matrix& m);

} // namespace liealg

#endif // LIEALG_LINALG_HPP
