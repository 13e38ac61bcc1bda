#include "liealg/linalg.hpp"

#include "liealg/errors.hpp"

#include <algorithm>

namespace liealg {

namespace {

void require_field(const Matrix& m)
{
    m.check_uniform_field();
    if (!m.field().is_field())
        throw UnsupportedField("linear algebra is not available over the ring " + m.field().name());
}

// In-place Gauss-Jordan restricted to the first `ncols` columns.
std::vector<std::size_t> reduce_in_place(Matrix& a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        a.swap_rows(row, sel);
        Scalar inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c)
            if (!a(row, c).is_zero()) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

RrefResult rref(const Matrix& m)
{
    require_field(m);
    Matrix a = m;
    auto pivots = reduce_in_place(a, a.cols());
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Scalar det(const Matrix& m)
{
    if (!m.square()) throw ShapeError("determinant of a non-square matrix");
    require_field(m);
    Matrix a = m;
    Scalar result = Scalar::one(m.field());
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(m.field());
        if (sel != col) {
            a.swap_rows(sel, col);
            result = -result;
        }
        const Scalar pivot = a(col, col);
        result *= pivot;
        Scalar inv = pivot.inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            Scalar factor = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
        }
    }
    return result;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length mismatch");
    require_field(m);
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        if (!(b[r].field() == m.field())) throw FieldMismatch("solve: right-hand side over another field");
        aug(r, m.cols()) = b[r];
    }
    auto pivots = reduce_in_place(aug, aug.cols());
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

Matrix inverse(const Matrix& m)
{
    if (!m.square()) throw InvalidInput("inverse of a non-square matrix");
    require_field(m);
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar::one(m.field());
    }
    auto pivots = reduce_in_place(aug, n);
    if (pivots.size() != n) throw InvalidInput("inverse of a singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

bool RowAccumulator::add(Vector row)
{
    if (row.size() != cols_) throw ShapeError("row length does not match accumulator width");
    if (!field_.is_field()) throw UnsupportedField("linear algebra is not available over the ring " + field_.name());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar coeff = row[pivots_[r]];
        if (coeff.is_zero()) continue;
        for (std::size_t c = pivots_[r]; c < cols_; ++c)
            if (!rows_[r][c].is_zero()) row[c] -= coeff * rows_[r][c];
    }
    std::size_t p = 0;
    while (p < cols_ && row[p].is_zero()) ++p;
    if (p == cols_) return false;
    Scalar inv = row[p].inverse();
    for (std::size_t c = p; c < cols_; ++c)
        if (!row[c].is_zero()) row[c] *= inv;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

Subspace Subspace::row_space(const Matrix& m)
{
    auto [reduced, pivots] = rref(m);
    Matrix basis(m.field(), pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) basis(r, c) = reduced(r, c);
    return Subspace(m.cols(), std::move(basis), std::move(pivots));
}

Subspace Subspace::span(const FieldDesc& field, std::size_t ambient, const std::vector<Vector>& vectors)
{
    return row_space(Matrix::from_vectors(field, ambient, vectors));
}

Subspace Subspace::zero(const FieldDesc& field, std::size_t ambient)
{
    return Subspace(ambient, Matrix(field, 0, ambient), {});
}

Subspace Subspace::whole(const FieldDesc& field, std::size_t ambient)
{
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
    return Subspace(ambient, Matrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::coordinate(const FieldDesc& field, std::size_t ambient, const std::vector<std::size_t>& indices)
{
    std::vector<Vector> vs;
    for (auto i : indices) vs.push_back(unit_vector(field, ambient, i));
    return span(field, ambient, vs);
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
    return out;
}

std::vector<std::size_t> Subspace::non_pivots() const
{
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != ambient_) throw ShapeError("vector does not live in the ambient space");
    Vector out = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        Scalar coeff = out[pivots_[r]];
        if (coeff.is_zero()) continue;
        for (std::size_t c = pivots_[r]; c < ambient_; ++c)
            if (!basis_(r, c).is_zero()) out[c] -= coeff * basis_(r, c);
    }
    return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_) return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const
{
    if (other.ambient_ != ambient_) throw ShapeError("subspace sum: ambient dimension mismatch");
    auto vs = basis_vectors();
    for (auto& v : other.basis_vectors()) vs.push_back(std::move(v));
    return span(field(), ambient_, vs);
}

std::optional<std::vector<std::size_t>> Subspace::coordinate_indices() const
{
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c)
            if (c != pivots_[r] && !basis_(r, c).is_zero()) return std::nullopt;
    return pivots_;
}

Subspace nullspace(const Matrix& m)
{
    auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> vs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = unit_vector(m.field(), m.cols(), f);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
        vs.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), vs);
}

} // namespace liealg
