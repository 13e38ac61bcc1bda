#include "liealg/hat_family.hpp"

#include "liealg/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace liealg {

std::int64_t mod3_hat(std::int64_t i)
{
    switch (((i % 3) + 3) % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
    }
}

HatSpec HatSpec::mod3_balanced() { return HatSpec(Kind::Mod3Balanced, 3, {-1, 0, 1}); }

HatSpec HatSpec::zmod(std::uint64_t p)
{
    if (p < 2) throw InvalidInput("Z_p hat requires p >= 2");
    return HatSpec(Kind::ZmodHom, p, {});
}

HatSpec HatSpec::identity() { return HatSpec(Kind::Identity, 0, {}); }

HatSpec HatSpec::mod_range(std::uint64_t p, std::vector<std::int64_t> representatives)
{
    if (p < 1) throw InvalidInput("mod-p hat requires p >= 1");
    if (representatives.size() != p) throw InvalidInput("representatives must contain exactly p values");
    auto m = static_cast<std::int64_t>(p);
    std::set<std::int64_t> residues;
    for (auto r : representatives) residues.insert(((r % m) + m) % m);
    if (residues.size() != p) throw InvalidInput("representatives do not form a complete residue system");
    return HatSpec(Kind::ModRange, p, std::move(representatives));
}

std::int64_t HatSpec::operator()(std::int64_t i) const
{
    switch (kind_) {
    case Kind::Mod3Balanced: return mod3_hat(i);
    case Kind::Identity: return i;
    case Kind::ZmodHom: {
        auto m = static_cast<std::int64_t>(modulus_);
        return ((i % m) + m) % m;
    }
    case Kind::ModRange: {
        auto m = static_cast<std::int64_t>(modulus_);
        std::int64_t r = ((i % m) + m) % m;
        for (auto rep : reps_)
            if (((rep % m) + m) % m == r) return rep;
        break;
    }
    }
    throw InternalInconsistency("hat map evaluation fell through");
}

std::int64_t HatSpec::normalize(std::int64_t x) const
{
    if (kind_ != Kind::ZmodHom) return x;
    auto m = static_cast<std::int64_t>(modulus_);
    return ((x % m) + m) % m;
}

FieldDesc HatSpec::default_field() const
{
    if (kind_ == Kind::ZmodHom) return FieldDesc::residues(modulus_);
    return FieldDesc::rationals();
}

bool HatSpec::compatible_with(const FieldDesc& field) const
{
    if (kind_ == Kind::ZmodHom) return !field.is_rationals() && field.modulus() == modulus_;
    return field.is_rationals();
}

std::string HatSpec::name() const
{
    switch (kind_) {
    case Kind::Mod3Balanced: return "mod3";
    case Kind::Identity: return "identity";
    case Kind::ZmodHom: return "zmod:" + std::to_string(modulus_);
    case Kind::ModRange: {
        std::string s = "range:" + std::to_string(modulus_) + ":";
        for (std::size_t i = 0; i < reps_.size(); ++i) s += (i ? "," : "") + std::to_string(reps_[i]);
        return s;
    }
    }
    return "?";
}

std::int64_t hat_eval(const HatSpec& h, std::int64_t i) { return h(i); }

HatPropertyReport hat_properties(const HatSpec& h, std::int64_t lo, std::int64_t hi)
{
    HatPropertyReport rep;
    auto fail = [](bool& flag, std::optional<HatPropertyReport::Pair>& w, std::int64_t i, std::int64_t j) {
        if (flag) w = HatPropertyReport::Pair{i, j};
        flag = false;
    };
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (h(-i) != h.normalize(-h(i))) fail(rep.add1, rep.add1_witness, i, i);
        for (std::int64_t j = lo; j <= hi; ++j) {
            if (h(i * j) != h.normalize(h(i) * h(j))) fail(rep.multiplicative, rep.multiplicative_witness, i, j);
            if (h(i + j) != h(h(i) + h(j))) fail(rep.add1, rep.add1_witness, i, j);
            if ((h(i - j) == 0) != (h(i) == h(j))) fail(rep.add2, rep.add2_witness, i, j);
            if (h(i + j) != h.normalize(h(i) + h(j))) fail(rep.additive, rep.additive_witness, i, j);
        }
    }
    return rep;
}

std::int64_t jacobi_coefficient(std::int64_t i, std::int64_t j, std::int64_t k) { return (i - j) * (i + j - k); }

std::optional<JacobiHatWitness> jacobi_hat_scan(const HatSpec& h, std::int64_t lo, std::int64_t hi)
{
    for (std::int64_t i = lo; i <= hi; ++i)
        for (std::int64_t j = lo; j <= hi; ++j)
            for (std::int64_t k = lo; k <= hi; ++k) {
                std::int64_t sum = h(jacobi_coefficient(i, j, k)) + h(jacobi_coefficient(j, k, i)) +
                                   h(jacobi_coefficient(k, i, j));
                if (h.normalize(sum) == 0) continue;
                auto rep = std::max({std::array{i, j, k}, std::array{j, k, i}, std::array{k, i, j}});
                auto [a, b, c] = rep;
                return JacobiHatWitness{a, b, c, h(jacobi_coefficient(a, b, c)), h(jacobi_coefficient(b, c, a)),
                                        h(jacobi_coefficient(c, a, b))};
            }
    return std::nullopt;
}

AnSpec::AnSpec(std::size_t n_, HatSpec hat_) : n(n_), hat(std::move(hat_)), field(hat.default_field()) {}

AnSpec::AnSpec(std::size_t n_, HatSpec hat_, FieldDesc field_) : n(n_), hat(std::move(hat_)), field(field_)
{
    if (!hat.compatible_with(field))
        throw InvalidInput("hat map " + hat.name() + " is not compatible with field " + field.name());
}

LieAlgebra build_An(const AnSpec& spec)
{
    const std::size_t n = spec.n;
    std::vector<BracketRecord> recs;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; i + j <= n; ++j) {
            Scalar c(spec.field, spec.hat(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j)));
            if (!c.is_zero()) recs.push_back({i, j, {{i + j, c}}});
        }
    std::vector<std::string> labels;
    std::vector<std::int64_t> degrees;
    for (std::size_t i = 0; i <= n; ++i) {
        labels.push_back("T" + std::to_string(i));
        degrees.push_back(static_cast<std::int64_t>(i));
    }
    return LieAlgebra(spec.field, n + 1, recs, std::move(labels), std::move(degrees));
}

LieAlgebra build_An(std::size_t n, const HatSpec& hat) { return build_An(AnSpec(n, hat)); }

Subspace suffix_subspace(std::size_t n, std::size_t m, const FieldDesc& field)
{
    if (m > n + 1) throw RangeError("suffix ideal A_{m,n} requires m <= n + 1");
    std::vector<std::size_t> idx;
    for (std::size_t i = m; i <= n; ++i) idx.push_back(i);
    return Subspace::coordinate(field, n + 1, idx);
}

Subspace skip_subspace(std::size_t n, std::size_t m, const FieldDesc& field)
{
    if (m < 2 || m > n + 1) throw RangeError("skip ideal requires 2 <= m <= n + 1");
    std::vector<std::size_t> idx{m - 2};
    for (std::size_t i = m; i <= n; ++i) idx.push_back(i);
    return Subspace::coordinate(field, n + 1, idx);
}

BilinearForm canonical_metric(std::size_t n, const Scalar& b)
{
    Matrix g(b.field(), n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) g(i, n - i) = Scalar::one(b.field());
    g(0, 0) += b;
    return BilinearForm(std::move(g));
}

BilinearForm canonical_metric(std::size_t n, std::int64_t b) { return canonical_metric(n, Scalar(FieldDesc{}, b)); }

BilinearForm DiagonalMetricAnsatz::metric() const
{
    if (weights.size() != n + 1) throw ShapeError("weight count must be n + 1");
    Matrix g(weights.front().field(), n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) g(n - j, j) = weights[j];
    return BilinearForm(std::move(g));
}

SingleDiagonalResult single_diagonal_metric_solve(std::size_t n, const HatSpec& hat)
{
    const LieAlgebra L = build_An(n, hat);
    const FieldDesc f = L.field();
    const std::size_t d = n + 1;

    // Unknowns w_0..w_n with (T_a, T_b) = w_b when a + b = n.
    std::vector<Vector> rows;
    for (std::size_t j = 0; j <= n; ++j) {
        if (n - j <= j) continue;
        Vector r = zero_vector(f, d);
        r[j] = Scalar::one(f);
        r[n - j] = -Scalar::one(f);
        rows.push_back(std::move(r));
    }
    // ([T_k,T_i], T_j) + (T_i, [T_k,T_j]) = 0
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector r = zero_vector(f, d);
                Vector ki = L.basis_bracket(k, i);
                Vector kj = L.basis_bracket(k, j);
                if (!ki[n - j].is_zero()) r[j] += ki[n - j];
                if (!kj[n - i].is_zero()) r[n - i] += kj[n - i];
                if (!is_zero(r)) rows.push_back(std::move(r));
            }
    Subspace sol = nullspace(Matrix::from_vectors(f, d, rows));

    SingleDiagonalResult out;
    out.solution_dim = sol.dim();
    if (sol.dim() == 0) return out;

    // A point on the moment curve sum_a s^a v_a avoids each of the d
    // coordinate hyperplanes not containing the solution space for all but
    // (d-1)(dim-1) values of s.
    auto basis = sol.basis_vectors();
    const std::size_t attempts = (d) * (basis.size() - 1) + 1;
    for (std::size_t s = 1; s <= attempts; ++s) {
        Vector w = zero_vector(f, d);
        Scalar power = Scalar::one(f);
        for (const auto& v : basis) {
            axpy(w, power, v);
            power *= Scalar(f, static_cast<std::int64_t>(s));
        }
        if (std::none_of(w.begin(), w.end(), [](const Scalar& x) { return x.is_zero(); })) {
            Scalar norm = w[0].inverse();
            for (auto& x : w) x *= norm;
            out.exists = true;
            out.ansatz = DiagonalMetricAnsatz{n, std::move(w)};
            return out;
        }
    }
    return out;
}

namespace {

bool index_order(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<std::size_t> mask_indices(std::uint64_t mask)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

void sort_subspaces(std::vector<Subspace>& v)
{
    std::sort(v.begin(), v.end(), [](const Subspace& a, const Subspace& b) {
        auto ia = a.coordinate_indices(), ib = b.coordinate_indices();
        if (ia && ib) return index_order(*ia, *ib);
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return static_cast<bool>(ia) && !ib;
    });
}

} // namespace

std::vector<Subspace> enumerate_coordinate_ideals(const LieAlgebra& L, std::uint64_t max_subsets)
{
    const std::size_t n = L.dim();
    if (n >= 63 || (std::uint64_t{1} << n) > max_subsets)
        throw CapExceeded("coordinate ideal enumeration of a " + std::to_string(n) +
                          "-dimensional algebra exceeds the cap of " + std::to_string(max_subsets) + " subsets");
    // A coordinate subspace S is an ideal iff, for each j in S, the support
    // of every [x_a, x_j] lies in S.
    std::vector<std::uint64_t> needs(n, 0);
    for (const auto& [key, terms] : L.table())
        for (const auto& t : terms) {
            needs[key.first] |= std::uint64_t{1} << t.k;
            needs[key.second] |= std::uint64_t{1} << t.k;
        }
    std::vector<std::vector<std::size_t>> found;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (std::uint64_t rest = mask; rest && ok; rest &= rest - 1) {
            auto j = static_cast<std::size_t>(std::countr_zero(rest));
            ok = (needs[j] & ~mask) == 0;
        }
        if (ok) found.push_back(mask_indices(mask));
    }
    std::sort(found.begin(), found.end(), index_order);
    std::vector<Subspace> out;
    for (const auto& idx : found) out.push_back(Subspace::coordinate(L.field(), n, idx));
    return out;
}

std::vector<Subspace> IdealClassification::subspaces(const FieldDesc& field) const
{
    std::vector<Subspace> out;
    for (auto m : suffix_ideals) out.push_back(suffix_subspace(n, m, field));
    for (auto m : skip_ideals) out.push_back(skip_subspace(n, m, field));
    out.insert(out.end(), other.begin(), other.end());
    sort_subspaces(out);
    return out;
}

IdealClassification classify_ideals_An(std::size_t n, const HatSpec& hat, std::uint64_t max_subsets)
{
    const LieAlgebra L = build_An(n, hat);
    const FieldDesc f = L.field();
    IdealClassification out;
    out.n = n;

    const bool brute_ok = n + 1 < 63 && (std::uint64_t{1} << (n + 1)) <= max_subsets;

    if (hat.kind() == HatSpec::Kind::Mod3Balanced) {
        for (std::size_t m = 0; m <= n + 1; ++m) out.suffix_ideals.push_back(m);
        for (std::size_t m = 2; m <= n + 1; ++m)
            if (m % 3 == 0) out.skip_ideals.push_back(m);
        for (const auto& s : out.subspaces(f))
            if (!is_ideal(L, s)) throw InternalInconsistency("classified subspace is not an ideal");
        if (brute_ok) {
            auto brute = enumerate_coordinate_ideals(L, max_subsets);
            if (brute != out.subspaces(f))
                throw InternalInconsistency("closed-form ideal classification of A_" + std::to_string(n) +
                                            " disagrees with brute force");
            out.cross_checked = true;
        }
        return out;
    }

    // No closed form is asserted for the other maps; sort brute force by shape.
    auto brute = enumerate_coordinate_ideals(L, max_subsets);
    out.cross_checked = true;
    for (const auto& s : brute) {
        bool matched = false;
        for (std::size_t m = 0; m <= n + 1 && !matched; ++m)
            if (s == suffix_subspace(n, m, f)) {
                out.suffix_ideals.push_back(m);
                matched = true;
            }
        for (std::size_t m = 2; m <= n + 1 && !matched; ++m)
            if (s == skip_subspace(n, m, f)) {
                out.skip_ideals.push_back(m);
                matched = true;
            }
        if (!matched) out.other.push_back(s);
    }
    std::sort(out.suffix_ideals.begin(), out.suffix_ideals.end());
    std::sort(out.skip_ideals.begin(), out.skip_ideals.end());
    return out;
}

std::optional<LinearMap> hat_shift_automorphism(std::size_t n)
{
    if (n % 3 == 1) return std::nullopt;
    const FieldDesc q;
    Matrix m(q, n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        auto target = static_cast<std::size_t>(static_cast<std::int64_t>(i) + mod3_hat(static_cast<std::int64_t>(i)));
        m(target, i) = Scalar(q, -1);
    }
    return LinearMap(std::move(m));
}

} // namespace liealg
