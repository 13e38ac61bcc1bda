#include "liealg/selfdual.hpp"

#include "liealg/errors.hpp"

namespace liealg {

std::optional<InvarianceDefect> invariance_defect(const LieAlgebra& L, const BilinearForm& b)
{
    if (b.dim() != L.dim()) throw ShapeError("form dimension does not match the algebra");
    if (!(b.field() == L.field())) throw FieldMismatch("form and algebra over different fields");
    const std::size_t n = L.dim();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            Vector ki = L.basis_bracket(k, i);
            for (std::size_t j = 0; j < n; ++j) {
                Vector kj = L.basis_bracket(k, j);
                Scalar s = Scalar::zero(L.field());
                for (std::size_t l = 0; l < n; ++l) {
                    if (!ki[l].is_zero()) s += ki[l] * b.entry(l, j);
                    if (!kj[l].is_zero()) s += kj[l] * b.entry(i, l);
                }
                if (!s.is_zero()) return InvarianceDefect{k, i, j, s};
            }
        }
    return std::nullopt;
}

bool is_invariant(const LieAlgebra& L, const BilinearForm& b) { return !invariance_defect(L, b).has_value(); }

std::vector<BilinearForm> invariant_form_space(const LieAlgebra& L)
{
    const std::size_t n = L.dim();
    const FieldDesc f = L.field();
    auto coord = [n](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + j;
    };
    const std::size_t unknowns = n * (n + 1) / 2;

    std::vector<Vector> brackets(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) brackets[a * n + c] = L.basis_bracket(a, c);

    RowAccumulator acc(f, unknowns);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                // sum_l c_ki^l B_lj + c_kj^l B_il = 0
                Vector row = zero_vector(f, unknowns);
                const Vector& ki = brackets[k * n + i];
                const Vector& kj = brackets[k * n + j];
                for (std::size_t l = 0; l < n; ++l) {
                    if (!ki[l].is_zero()) row[coord(l, j)] += ki[l];
                    if (!kj[l].is_zero()) row[coord(i, l)] += kj[l];
                }
                if (!is_zero(row)) acc.add(std::move(row));
            }
    Subspace sol = acc.rank() == 0 ? Subspace::whole(f, unknowns) : nullspace(acc.matrix());

    std::vector<BilinearForm> out;
    for (const auto& v : sol.basis_vectors()) {
        Matrix g(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                g(i, j) = v[coord(i, j)];
                g(j, i) = v[coord(i, j)];
            }
        out.emplace_back(std::move(g));
    }
    return out;
}

namespace {

Matrix combine(const std::vector<BilinearForm>& basis, const std::vector<std::int64_t>& coeffs, const FieldDesc& f,
               std::size_t n)
{
    Matrix g(f, n, n);
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (coeffs[a] != 0) g = g + Scalar(f, coeffs[a]) * basis[a].matrix();
    return g;
}

// Odometer over [lo, hi]^d in lexicographic order; returns false after the last vector.
bool next_vector(std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi)
{
    for (std::size_t a = v.size(); a-- > 0;) {
        if (v[a] < hi) {
            ++v[a];
            return true;
        }
        v[a] = lo;
    }
    return false;
}

bool all_zero(const std::vector<std::int64_t>& v)
{
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

} // namespace

std::optional<BilinearForm> nondegenerate_invariant_metric(const LieAlgebra& L, const MetricSearchOptions& opts)
{
    const std::size_t n = L.dim();
    const auto basis = invariant_form_space(L);
    if (n == 0) return BilinearForm::zero(L.field(), 0);
    for (const auto& b : basis)
        if (b.is_nondegenerate()) return b;
    if (basis.size() < 2) return std::nullopt;

    const std::int64_t k = opts.coefficient_bound;
    std::vector<std::int64_t> coeffs(basis.size(), -k);
    std::size_t tried = 0;
    do {
        if (all_zero(coeffs)) continue;
        if (++tried > opts.max_combinations) break;
        Matrix g = combine(basis, coeffs, L.field(), n);
        if (!det(g).is_zero()) return BilinearForm(std::move(g));
    } while (next_vector(coeffs, -k, k));
    return std::nullopt;
}

std::string to_string(SelfDuality s)
{
    switch (s) {
    case SelfDuality::Yes: return "yes";
    case SelfDuality::No: return "no";
    case SelfDuality::Unknown: return "unknown";
    }
    return "?";
}

SelfDualVerdict is_self_dual(const LieAlgebra& L, const MetricSearchOptions& opts)
{
    SelfDualVerdict out;
    const auto basis = invariant_form_space(L);
    out.form_space_dim = basis.size();
    if (auto m = nondegenerate_invariant_metric(L, opts)) {
        out.status = SelfDuality::Yes;
        out.metric = std::move(*m);
        return out;
    }
    const std::size_t n = L.dim();
    const std::size_t d = basis.size();
    if (d == 0) {
        out.status = SelfDuality::No;
        out.certificate = "the only invariant symmetric form is zero";
        return out;
    }
    const bool field_large = L.field().is_rationals() || L.field().modulus() > n;
    if (d > 4 || n > 10 || !field_large) {
        out.certificate = "no non-degenerate invariant form found; space too large for the exact certificate";
        return out;
    }
    std::vector<std::int64_t> point(d, 0);
    std::size_t points = 0;
    do {
        ++points;
        Matrix g = combine(basis, point, L.field(), n);
        if (!det(g).is_zero()) {
            out.status = SelfDuality::Yes;
            out.metric = BilinearForm(std::move(g));
            return out;
        }
    } while (next_vector(point, 0, static_cast<std::int64_t>(n)));
    out.status = SelfDuality::No;
    out.certificate = "generic determinant of the " + std::to_string(d) +
                      "-dimensional invariant form space vanishes on all " + std::to_string(points) +
                      " points of {0.." + std::to_string(n) + "}^" + std::to_string(d) +
                      "; its degree in each variable is at most " + std::to_string(n) +
                      ", so it is the zero polynomial";
    return out;
}

Subspace orthogonal_complement(const BilinearForm& b, const Subspace& s)
{
    if (s.ambient_dim() != b.dim()) throw ShapeError("subspace does not live in the form's space");
    if (!b.is_nondegenerate()) throw InvalidInput("orthogonal complement requires a non-degenerate form");
    if (s.dim() == 0) return Subspace::whole(b.field(), b.dim());
    std::vector<Vector> rows;
    for (const auto& v : s.basis_vectors()) rows.push_back(b.matrix().apply(v));
    return nullspace(Matrix::from_vectors(b.field(), b.dim(), rows));
}

std::optional<Decomposition> decomposability_check(const LieAlgebra& L, const BilinearForm& b,
                                                   const std::vector<Subspace>& ideals)
{
    if (!b.is_nondegenerate()) throw InvalidInput("decomposability check requires a non-degenerate metric");
    if (auto d = invariance_defect(L, b))
        throw InvalidInput("decomposability check requires an invariant metric");
    for (const auto& j : ideals) {
        if (j.dim() == 0 || j.dim() == L.dim()) continue;
        if (det(b.restricted_gram(j)).is_zero()) continue;
        Subspace perp = orthogonal_complement(b, j);
        if (is_ideal(L, perp)) return Decomposition{j, perp};
    }
    return std::nullopt;
}

std::optional<Decomposition> decomposability_check(const LieAlgebra& L, const BilinearForm& b,
                                                   std::uint64_t max_subsets)
{
    return decomposability_check(L, b, enumerate_coordinate_ideals(L, max_subsets));
}

std::optional<Decomposition> decomposability_check_An(std::size_t n, const BilinearForm& b)
{
    const LieAlgebra L = build_An(n);
    // cap 0 skips the brute-force cross-check
    return decomposability_check(L, b, classify_ideals_An(n, HatSpec::mod3_balanced(), 0).subspaces());
}

namespace {

void postconditions(const MetricAlgebra& out, const char* what)
{
    if (auto w = check_jacobi(out.algebra))
        throw PostconditionFailure(std::string(what) + ": output violates the Jacobi identity at (" +
                                   std::to_string(w->i) + "," + std::to_string(w->j) + "," + std::to_string(w->k) + ")");
    if (auto w = invariance_defect(out.algebra, out.metric))
        throw PostconditionFailure(std::string(what) + ": output metric is not invariant at (" +
                                   std::to_string(w->k) + "," + std::to_string(w->i) + "," + std::to_string(w->j) + ")");
    if (!out.metric.is_nondegenerate())
        throw PostconditionFailure(std::string(what) + ": output metric is degenerate");
}

void add_term(std::vector<BracketRecord>& recs, std::size_t i, std::size_t j, std::size_t k, const Scalar& c)
{
    if (c.is_zero()) return;
    recs.push_back({i, j, {{k, c}}});
}

std::vector<std::string> block_labels(const std::string& prefix, std::size_t count)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

MetricAlgebra double_extend(const DoubleExtensionInput& in)
{
    const FieldDesc f = in.b.field();
    const std::size_t r = in.b.dim();
    const std::size_t na = in.a_dim;
    const Matrix& g = in.omega.matrix();

    if (in.omega.dim() != na) throw InvalidInput("omega must be an a_dim x a_dim form");
    if (!(in.omega.field() == f)) throw FieldMismatch("omega and B over different fields");
    if (!in.omega.is_nondegenerate()) throw InvalidInput("omega must be non-degenerate");
    if (in.action.size() != r) throw InvalidInput("need one action matrix per basis vector of B");
    if (check_jacobi(in.b)) throw InvalidInput("B violates the Jacobi identity");
    for (const auto& m : in.action) {
        if (m.rows() != na || m.cols() != na) throw InvalidInput("action matrices must be a_dim x a_dim");
        if (!(m.field() == f)) throw FieldMismatch("action matrix over another field");
        if (!(m.transpose() * g + g * m).is_zero()) throw InvalidInput("action is not skew with respect to omega");
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            Matrix lhs(f, na, na);
            Vector ij = in.b.basis_bracket(i, j);
            for (std::size_t k = 0; k < r; ++k)
                if (!ij[k].is_zero()) lhs = lhs + ij[k] * in.action[k];
            if (!(lhs == in.action[i] * in.action[j] - in.action[j] * in.action[i]))
                throw InvalidInput("action is not a representation of B");
        }
    BilinearForm fb = in.f.value_or(BilinearForm::zero(f, r));
    if (fb.dim() != r) throw InvalidInput("F must be an r x r form");
    if (!is_invariant(in.b, fb)) throw InvalidInput("F must be an invariant form on B");

    const std::size_t a0 = r, s0 = r + na, dim = 2 * r + na;
    std::vector<BracketRecord> recs;
    for (const auto& rec : in.b.records()) recs.push_back(rec);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < na; ++c)
            for (std::size_t row = 0; row < na; ++row) add_term(recs, i, a0 + c, a0 + row, in.action[i](row, c));
    for (std::size_t c = 0; c < na; ++c)
        for (std::size_t d = c + 1; d < na; ++d)
            for (std::size_t i = 0; i < r; ++i) {
                Scalar s = Scalar::zero(f);
                for (std::size_t row = 0; row < na; ++row)
                    if (!in.action[i](row, c).is_zero()) s += in.action[i](row, c) * g(row, d);
                add_term(recs, a0 + c, a0 + d, s0 + i, s);
            }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            Vector ik = in.b.basis_bracket(i, k);
            for (std::size_t j = 0; j < r; ++j) add_term(recs, i, s0 + j, s0 + k, -ik[j]);
        }

    Matrix metric(f, dim, dim);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) metric(i, j) = fb.entry(i, j);
        metric(i, s0 + i) = Scalar::one(f);
        metric(s0 + i, i) = Scalar::one(f);
    }
    for (std::size_t c = 0; c < na; ++c)
        for (std::size_t d = 0; d < na; ++d) metric(a0 + c, a0 + d) = g(c, d);

    auto labels = block_labels("b", r);
    for (auto& l : block_labels("a", na)) labels.push_back(l);
    for (auto& l : block_labels("b*", r)) labels.push_back(l);

    MetricAlgebra out{LieAlgebra(f, dim, recs, std::move(labels)), BilinearForm(std::move(metric)), {r, na, r}};
    postconditions(out, "double extension");
    return out;
}

MetricAlgebra wigner_contract(const ContractionInput& in)
{
    const LieAlgebra& s = in.s0;
    const FieldDesc f = s.field();
    const std::size_t n = s.dim();
    if (in.b0.ambient_dim() != n || in.omega0.dim() != n) throw InvalidInput("contraction input dimensions disagree");
    if (in.b0.dim() == 0 || in.b0.dim() == n) throw InvalidInput("B0 must be a nonzero proper subalgebra");
    if (!is_subalgebra(s, in.b0)) throw InvalidInput("B0 is not closed under the bracket");
    if (check_jacobi(s)) throw InvalidInput("S0 violates the Jacobi identity");
    if (!in.omega0.is_nondegenerate() || !is_invariant(s, in.omega0))
        throw InvalidInput("the metric on S0 must be invariant and non-degenerate");
    if (det(in.omega0.restricted_gram(in.b0)).is_zero())
        throw InvalidInput("restriction of the metric on S0 to B0 must be non-degenerate");

    const Subspace p = orthogonal_complement(in.omega0, in.b0);
    const auto bvec = in.b0.basis_vectors();
    const auto pvec = p.basis_vectors();
    const std::size_t r = bvec.size(), np = pvec.size();

    // columns: B0 basis then P basis; coords(v) = C^{-1} v
    Matrix c(f, n, n);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t row = 0; row < n; ++row) c(row, a) = bvec[a][row];
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t row = 0; row < n; ++row) c(row, r + a) = pvec[a][row];
    const Matrix cinv = inverse(c);
    auto coords = [&](const std::vector<Vector>& basis_a, std::size_t ia, const std::vector<Vector>& basis_b,
                      std::size_t ib) { return cinv.apply(bracket(s, basis_a[ia], basis_b[ib])); };

    const std::size_t p0 = r, t0 = r + np, dim = 2 * r + np;
    std::vector<BracketRecord> recs;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            Vector v = coords(bvec, a, bvec, b);
            for (std::size_t k = 0; k < r; ++k) add_term(recs, a, b, k, v[k]);
            for (std::size_t k = 0; k < r; ++k) add_term(recs, a, t0 + b, t0 + k, v[k]); // [b, z~] = ([b,z])~
            for (std::size_t k = 0; k < r; ++k) add_term(recs, b, t0 + a, t0 + k, -v[k]);
        }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t q = 0; q < np; ++q) {
            Vector v = coords(bvec, a, pvec, q);
            for (std::size_t k = 0; k < np; ++k) add_term(recs, a, p0 + q, p0 + k, v[r + k]);
        }
    for (std::size_t q = 0; q < np; ++q)
        for (std::size_t q2 = q + 1; q2 < np; ++q2) {
            Vector v = coords(pvec, q, pvec, q2);
            for (std::size_t k = 0; k < r; ++k) add_term(recs, p0 + q, p0 + q2, t0 + k, v[k]);
        }

    Matrix metric(f, dim, dim);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            Scalar w = in.omega0(bvec[a], bvec[b]);
            metric(a, b) = w;
            metric(a, t0 + b) = w;
            metric(t0 + b, a) = w;
        }
    for (std::size_t q = 0; q < np; ++q)
        for (std::size_t q2 = 0; q2 < np; ++q2) metric(p0 + q, p0 + q2) = in.omega0(pvec[q], pvec[q2]);

    auto labels = block_labels("b", r);
    for (auto& l : block_labels("p", np)) labels.push_back(l);
    for (auto& l : block_labels("b~", r)) labels.push_back(l);

    MetricAlgebra out{LieAlgebra(f, dim, recs, std::move(labels)), BilinearForm(std::move(metric)), {r, np, r}};
    postconditions(out, "Wigner contraction");
    return out;
}

namespace {

void require_self_dual_n(std::size_t n)
{
    if (n % 3 != 0) throw InvalidInput("A_n is self-dual only for n = 0 mod 3, got n = " + std::to_string(n));
}

} // namespace

std::vector<std::size_t> double_extension_candidates_An(std::size_t n)
{
    require_self_dual_n(n);
    const LieAlgebra L = build_An(n);
    std::vector<std::size_t> out;
    for (std::size_t m : {1, 2}) {
        if (2 * m > n + 1) continue; // dim A_n >= 2 dim B
        const Subspace j = suffix_subspace(n, m);
        if (bracket_span(L, j, j).dim() > m) continue; // [J,J] inside B*
        out.push_back(m);
    }
    return out;
}

bool derived_suffix_check(std::size_t n, std::size_t m)
{
    if (m > n) throw RangeError("derived_suffix_check requires m <= n");
    const LieAlgebra L = build_An(n);
    const Subspace j = suffix_subspace(n, m);
    return bracket_span(L, j, j) == suffix_subspace(n, std::min(2 * m + 1, n + 1));
}

std::string to_string(DeeperClass c)
{
    switch (c) {
    case DeeperClass::WignerObtainable: return "WignerObtainable";
    case DeeperClass::AbelianDoubleExtensionOnly: return "AbelianDoubleExtensionOnly";
    case DeeperClass::Deeper: return "Deeper";
    }
    return "?";
}

DeeperVerdict deeper_check_An(std::size_t n)
{
    require_self_dual_n(n);
    if (n == 0) throw InvalidInput("A_0 is the one-dimensional Abelian algebra");
    DeeperVerdict out;
    out.n = n;
    out.candidates = double_extension_candidates_An(n);
    const LieAlgebra L = build_An(n);
    bool wigner = false;
    for (auto m : out.candidates) {
        // B is isomorphic to A_n / A_{m,n}; a contraction needs B self-dual
        const LieAlgebra b = quotient(L, suffix_subspace(n, m));
        bool sd = is_self_dual(b).status == SelfDuality::Yes;
        out.candidate_b_self_dual.push_back(sd);
        wigner = wigner || sd;
    }
    if (wigner)
        out.verdict = DeeperClass::WignerObtainable;
    else if (!out.candidates.empty())
        out.verdict = DeeperClass::AbelianDoubleExtensionOnly;
    else
        out.verdict = DeeperClass::Deeper;
    return out;
}

InvariantProfile invariant_profile(const LieAlgebra& L)
{
    InvariantProfile p;
    p.dim = L.dim();
    for (const auto& s : derived_series(L)) p.derived_dims.push_back(s.dim());
    for (const auto& s : lower_central_series(L)) p.lower_central_dims.push_back(s.dim());
    p.center_dim = center(L).dim();
    p.solvable = p.derived_dims.back() == 0;
    p.nilpotent = p.lower_central_dims.back() == 0;
    p.self_dual = is_self_dual(L).status;
    return p;
}

} // namespace liealg
