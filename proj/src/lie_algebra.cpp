#include "liealg/lie_algebra.hpp"

#include "liealg/errors.hpp"

#include <algorithm>

namespace liealg {

LieAlgebra::LieAlgebra(const FieldDesc& field, std::size_t dim, const std::vector<BracketRecord>& brackets,
                       std::vector<std::string> labels, std::optional<std::vector<std::int64_t>> grading)
    : field_(field), dim_(dim), labels_(std::move(labels)), grading_(std::move(grading))
{
    if (!labels_.empty() && labels_.size() != dim_) throw InvalidInput("label count does not match dimension");
    if (grading_ && grading_->size() != dim_) throw InvalidInput("grading length does not match dimension");

    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> acc;
    for (const auto& rec : brackets) {
        if (rec.i >= dim_ || rec.j >= dim_) throw RangeError("bracket index out of range");
        for (const auto& t : rec.terms) {
            if (t.k >= dim_) throw RangeError("bracket output index out of range");
            if (!(t.c.field() == field_)) throw FieldMismatch("structure constant over " + t.c.field().name());
            if (rec.i == rec.j) {
                if (!t.c.is_zero()) throw InvalidInput("[x_i, x_i] must vanish");
                continue;
            }
            auto key = std::minmax(rec.i, rec.j);
            Scalar c = rec.i < rec.j ? t.c : -t.c;
            auto& slot = acc[{key.first, key.second}];
            auto [it, fresh] = slot.try_emplace(t.k, c);
            if (!fresh) it->second += c;
        }
    }
    for (auto& [key, terms] : acc) {
        std::vector<Term> row;
        for (auto& [k, c] : terms)
            if (!c.is_zero()) row.push_back({k, c});
        if (!row.empty()) table_.emplace(key, std::move(row));
    }
}

LieAlgebra LieAlgebra::abelian(const FieldDesc& field, std::size_t dim) { return LieAlgebra(field, dim, {}); }

std::vector<BracketRecord> LieAlgebra::records() const
{
    std::vector<BracketRecord> out;
    for (const auto& [key, terms] : table_) out.push_back({key.first, key.second, terms});
    return out;
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const
{
    if (i >= dim_ || j >= dim_) throw RangeError("basis index out of range");
    Vector out = zero_vector(field_, dim_);
    if (i == j) return out;
    auto it = table_.find(std::minmax(i, j));
    if (it == table_.end()) return out;
    for (const auto& t : it->second) out[t.k] = i < j ? t.c : -t.c;
    return out;
}

Scalar LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const
{
    if (k >= dim_) throw RangeError("basis index out of range");
    return basis_bracket(i, j)[k];
}

LieAlgebra LieAlgebra::with_labels(std::vector<std::string> labels) const
{
    if (!labels.empty() && labels.size() != dim_) throw InvalidInput("label count does not match dimension");
    LieAlgebra out = *this;
    out.labels_ = std::move(labels);
    return out;
}

LieAlgebra LieAlgebra::with_grading(std::optional<std::vector<std::int64_t>> grading) const
{
    if (grading && grading->size() != dim_) throw InvalidInput("grading length does not match dimension");
    LieAlgebra out = *this;
    out.grading_ = std::move(grading);
    return out;
}

bool same_structure(const LieAlgebra& a, const LieAlgebra& b)
{
    return a.dim() == b.dim() && a.field() == b.field() && a.table() == b.table();
}

namespace {

void check_vector(const LieAlgebra& L, const Vector& v)
{
    if (v.size() != L.dim()) throw ShapeError("vector length does not match algebra dimension");
    for (const auto& x : v)
        if (!(x.field() == L.field())) throw FieldMismatch("vector entry over " + x.field().name());
}

} // namespace

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y)
{
    check_vector(L, x);
    check_vector(L, y);
    Vector out = zero_vector(L.field(), L.dim());
    for (const auto& [key, terms] : L.table()) {
        auto [i, j] = key;
        Scalar coeff = x[i] * y[j] - x[j] * y[i];
        if (coeff.is_zero()) continue;
        for (const auto& t : terms) out[t.k] += coeff * t.c;
    }
    return out;
}

Vector bracket_with_basis(const LieAlgebra& L, const Vector& x, std::size_t k)
{
    check_vector(L, x);
    if (k >= L.dim()) throw RangeError("basis index out of range");
    Vector out = zero_vector(L.field(), L.dim());
    for (std::size_t a = 0; a < L.dim(); ++a) {
        if (x[a].is_zero() || a == k) continue;
        auto it = L.table().find(std::minmax(a, k));
        if (it == L.table().end()) continue;
        Scalar coeff = a < k ? x[a] : -x[a];
        for (const auto& t : it->second) out[t.k] += coeff * t.c;
    }
    return out;
}

std::optional<JacobiWitness> check_jacobi(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector ij = L.basis_bracket(i, j);
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector defect = bracket_with_basis(L, ij, k);
                axpy(defect, Scalar::one(L.field()), bracket_with_basis(L, L.basis_bracket(j, k), i));
                axpy(defect, Scalar::one(L.field()), bracket_with_basis(L, L.basis_bracket(k, i), j));
                if (!is_zero(defect)) return JacobiWitness{i, j, k, std::move(defect)};
            }
        }
    return std::nullopt;
}

LinearMap::LinearMap(Matrix m) : m_(std::move(m))
{
    if (!m_.square()) throw ShapeError("linear map matrix must be square");
}

LinearMap LinearMap::identity(const FieldDesc& field, std::size_t dim) { return LinearMap(Matrix::identity(field, dim)); }

Subspace LinearMap::image(const Subspace& s) const
{
    if (s.ambient_dim() != dim()) throw ShapeError("subspace does not live in the map's domain");
    std::vector<Vector> vs;
    for (const auto& v : s.basis_vectors()) vs.push_back(m_.apply(v));
    return Subspace::span(m_.field(), dim(), vs);
}

LinearMap adjoint(const LieAlgebra& L, const Vector& x)
{
    check_vector(L, x);
    Matrix m(L.field(), L.dim(), L.dim());
    for (std::size_t c = 0; c < L.dim(); ++c) {
        Vector col = bracket_with_basis(L, x, c);
        for (std::size_t r = 0; r < L.dim(); ++r) m(r, c) = col[r];
    }
    return LinearMap(std::move(m));
}

BilinearForm killing_form(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(adjoint(L, unit_vector(L.field(), n, i)).matrix());
    Matrix k(L.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar tr = Scalar::zero(L.field());
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero()) tr += ads[i](a, b) * ads[j](b, a);
            k(i, j) = tr;
            k(j, i) = tr;
        }
    return BilinearForm(std::move(k));
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b)
{
    std::vector<Vector> vs;
    auto bb = b.basis_vectors();
    for (const auto& u : a.basis_vectors())
        for (const auto& v : bb) {
            Vector w = bracket(L, u, v);
            if (!is_zero(w)) vs.push_back(std::move(w));
        }
    return Subspace::span(L.field(), L.dim(), vs);
}

std::vector<Subspace> derived_series(const LieAlgebra& L)
{
    std::vector<Subspace> series{Subspace::whole(L.field(), L.dim())};
    while (true) {
        Subspace next = bracket_span(L, series.back(), series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L)
{
    const Subspace whole = Subspace::whole(L.field(), L.dim());
    std::vector<Subspace> series{whole};
    while (true) {
        Subspace next = bracket_span(L, whole, series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().dim() == 0; }

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().dim() == 0; }

Subspace center(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    // row (j, k): sum_i x_i c_ij^k = 0
    Matrix system(L.field(), n * n, n);
    for (const auto& [key, terms] : L.table()) {
        auto [i, j] = key;
        for (const auto& t : terms) {
            system(j * n + t.k, i) += t.c;
            system(i * n + t.k, j) -= t.c;
        }
    }
    return nullspace(system);
}

bool is_ideal(const LieAlgebra& L, const Subspace& s)
{
    if (s.ambient_dim() != L.dim()) throw ShapeError("subspace does not live in the algebra");
    for (const auto& v : s.basis_vectors())
        for (std::size_t a = 0; a < L.dim(); ++a)
            if (!s.contains(bracket_with_basis(L, v, a))) return false;
    return true;
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s)
{
    if (s.ambient_dim() != L.dim()) throw ShapeError("subspace does not live in the algebra");
    auto basis = s.basis_vectors();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!s.contains(bracket(L, basis[a], basis[b]))) return false;
    return true;
}

Vector quotient_coordinates(const Subspace& j, const Vector& v)
{
    Vector r = j.reduce(v);
    Vector out;
    for (auto q : j.non_pivots()) out.push_back(r[q]);
    return out;
}

LieAlgebra quotient(const LieAlgebra& L, const Subspace& j)
{
    if (!is_ideal(L, j)) throw NotAnIdeal("quotient requires an ideal");
    auto q = j.non_pivots();
    std::vector<BracketRecord> recs;
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = a + 1; b < q.size(); ++b) {
            Vector w = quotient_coordinates(j, L.basis_bracket(q[a], q[b]));
            BracketRecord rec{a, b, {}};
            for (std::size_t c = 0; c < w.size(); ++c)
                if (!w[c].is_zero()) rec.terms.push_back({c, w[c]});
            if (!rec.terms.empty()) recs.push_back(std::move(rec));
        }
    std::vector<std::string> labels;
    if (!L.labels().empty())
        for (auto idx : q) labels.push_back(L.labels()[idx]);
    std::optional<std::vector<std::int64_t>> grading;
    if (L.grading() && j.coordinate_indices()) {
        grading.emplace();
        for (auto idx : q) grading->push_back((*L.grading())[idx]);
    }
    return LieAlgebra(L.field(), q.size(), recs, std::move(labels), std::move(grading));
}

bool is_automorphism(const LieAlgebra& L, const LinearMap& phi)
{
    if (phi.dim() != L.dim()) return false;
    if (det(phi.matrix()).is_zero()) return false;
    std::vector<Vector> images;
    for (std::size_t c = 0; c < L.dim(); ++c) images.push_back(phi.matrix().column(c));
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j)
            if (!(phi(L.basis_bracket(i, j)) == bracket(L, images[i], images[j]))) return false;
    return true;
}

DerivationSpace derivation_space(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
    Matrix system(L.field(), pairs * n, n * n);
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++p) {
            // D[x_i,x_j] - [D x_i, x_j] - [x_i, D x_j] = 0, component l
            Vector ij = L.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (ij[k].is_zero()) continue;
                for (std::size_t l = 0; l < n; ++l) system(p * n + l, l * n + k) += ij[k];
            }
            for (std::size_t a = 0; a < n; ++a) {
                Vector aj = L.basis_bracket(a, j);
                Vector ia = L.basis_bracket(i, a);
                for (std::size_t l = 0; l < n; ++l) {
                    if (!aj[l].is_zero()) system(p * n + l, a * n + i) -= aj[l];
                    if (!ia[l].is_zero()) system(p * n + l, a * n + j) -= ia[l];
                }
            }
        }
    DerivationSpace out;
    out.all = nullspace(system);
    out.inner_dim = n - center(L).dim();
    out.outer_dim = out.all.dim() - out.inner_dim;
    return out;
}

std::optional<GradingViolation> grading_violation(const LieAlgebra& L, const std::vector<std::int64_t>& degrees)
{
    if (degrees.size() != L.dim()) throw ShapeError("degree list length does not match dimension");
    for (const auto& [key, terms] : L.table())
        for (const auto& t : terms)
            if (degrees[t.k] != degrees[key.first] + degrees[key.second])
                return GradingViolation{key.first, key.second, t.k};
    return std::nullopt;
}

bool check_grading(const LieAlgebra& L, const std::vector<std::int64_t>& degrees)
{
    return !grading_violation(L, degrees).has_value();
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
    if (!(a.field() == b.field())) throw FieldMismatch("direct sum over different fields");
    std::vector<BracketRecord> recs = a.records();
    for (auto rec : b.records()) {
        rec.i += a.dim();
        rec.j += a.dim();
        for (auto& t : rec.terms) t.k += a.dim();
        recs.push_back(std::move(rec));
    }
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty()) {
        labels = a.labels();
        labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    }
    std::optional<std::vector<std::int64_t>> grading;
    if (a.grading() && b.grading()) {
        grading = *a.grading();
        grading->insert(grading->end(), b.grading()->begin(), b.grading()->end());
    }
    return LieAlgebra(a.field(), a.dim() + b.dim(), recs, std::move(labels), std::move(grading));
}

} // namespace liealg
