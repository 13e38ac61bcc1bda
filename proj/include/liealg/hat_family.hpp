#ifndef LIEALG_HAT_FAMILY_HPP
#define LIEALG_HAT_FAMILY_HPP

#include "liealg/lie_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

/*
 * Index maps w : Z -> ring used as structure constants of
 *
 *     [T_i, T_j] = w(i - j) T_{i+j}     (i + j <= n, zero otherwise)
 *
 * Ring elements are carried as int64 values: integers for Mod3Balanced,
 * Identity and ModRange, residues in [0, p) for ZmodHom(p).
 */
class HatSpec {
public:
    enum class Kind { Mod3Balanced, ZmodHom, Identity, ModRange };

    /// i mod 3 with representatives {-1, 0, 1}.
    static HatSpec mod3_balanced();
    /// Natural homomorphism Z -> Z_p, p >= 2.
    static HatSpec zmod(std::uint64_t p);
    static HatSpec identity();
    /// i mod p with the given representatives; they must form a complete
    /// residue system mod p.
    static HatSpec mod_range(std::uint64_t p, std::vector<std::int64_t> representatives);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::int64_t>& representatives() const { return reps_; }

    std::int64_t operator()(std::int64_t i) const;
    /// Normal form of an element of the codomain ring (reduction mod p for
    /// ZmodHom, the value itself otherwise).
    std::int64_t normalize(std::int64_t x) const;

    /// Q for integer-valued maps, Z/p (a prime field when p is prime) for ZmodHom.
    FieldDesc default_field() const;
    bool compatible_with(const FieldDesc& field) const;

    /// "mod3", "identity", "zmod:P" or "range:P:r0,r1,..."
    std::string name() const;

    friend bool operator==(const HatSpec&, const HatSpec&) = default;

private:
    HatSpec(Kind k, std::uint64_t p, std::vector<std::int64_t> reps) : kind_(k), modulus_(p), reps_(std::move(reps)) {}

    Kind kind_ = Kind::Mod3Balanced;
    std::uint64_t modulus_ = 3;
    std::vector<std::int64_t> reps_;
};

std::int64_t hat_eval(const HatSpec& h, std::int64_t i);

/// Verdicts of the algebraic properties of a hat map on window x window.
struct HatPropertyReport {
    using Pair = std::pair<std::int64_t, std::int64_t>;
    bool multiplicative = true; // w(ij) = w(i) w(j)
    bool add1 = true;           // w(i+j) = w(w(i)+w(j)) and w(-i) = -w(i)
    bool add2 = true;           // w(i-j) = 0  <=>  w(i) = w(j)
    bool additive = true;       // w(i+j) = w(i) + w(j), i.e. a genuine homomorphism
    std::optional<Pair> multiplicative_witness, add1_witness, add2_witness, additive_witness;
};

HatPropertyReport hat_properties(const HatSpec& h, std::int64_t lo, std::int64_t hi);

/// c_ijk = (i - j)(i + j - k)
std::int64_t jacobi_coefficient(std::int64_t i, std::int64_t j, std::int64_t k);

struct JacobiHatWitness {
    std::int64_t i, j, k;
    std::int64_t c_ijk, c_jki, c_kij; // hat values
};

/// Scans (i, j, k) in [lo, hi]^3 for w(c_ijk) + w(c_jki) + w(c_kij) != 0.
/// A failing cyclic class is reported by its lexicographically greatest
/// rotation (the sum is invariant under cyclic permutation).
std::optional<JacobiHatWitness> jacobi_hat_scan(const HatSpec& h, std::int64_t lo, std::int64_t hi);

struct AnSpec {
    std::size_t n = 0;
    HatSpec hat = HatSpec::mod3_balanced();
    FieldDesc field;

    AnSpec(std::size_t n_, HatSpec hat_);
    /// Throws InvalidInput if the field cannot hold the hat values.
    AnSpec(std::size_t n_, HatSpec hat_, FieldDesc field_);
};

/// Truncation A_n: basis T_0..T_n, grading deg T_i = i, c_ij^{i+j} = w(i-j)
/// for i < j, i + j <= n.
LieAlgebra build_An(const AnSpec& spec);
LieAlgebra build_An(std::size_t n, const HatSpec& hat = HatSpec::mod3_balanced());

/// A_{m,n} = span{T_m, ..., T_n}; m = n + 1 gives the zero space.
Subspace suffix_subspace(std::size_t n, std::size_t m, const FieldDesc& field = {});
/// span{T_{m-2}} + A_{m,n}; requires 2 <= m <= n + 1.
Subspace skip_subspace(std::size_t n, std::size_t m, const FieldDesc& field = {});

/// (T_i, T_j) = delta_{i+j,n} + b delta_i0 delta_j0
BilinearForm canonical_metric(std::size_t n, const Scalar& b);
BilinearForm canonical_metric(std::size_t n, std::int64_t b = 0);

/// (T_i, T_j) = weights[j] delta_{i+j,n}
struct DiagonalMetricAnsatz {
    std::size_t n = 0;
    std::vector<Scalar> weights;
    BilinearForm metric() const;
};

struct SingleDiagonalResult {
    bool exists = false;
    std::optional<DiagonalMetricAnsatz> ansatz;
    std::size_t solution_dim = 0; // dimension of the linear solution space in the weights
};

/// Solves the invariance system for metrics supported on the reversed
/// diagonal i + j = n and decides whether one of them is non-degenerate.
SingleDiagonalResult single_diagonal_metric_solve(std::size_t n, const HatSpec& hat = HatSpec::mod3_balanced());

inline constexpr std::uint64_t kDefaultBruteCap = std::uint64_t{1} << 16;

/// Every ideal spanned by a subset of the basis, sorted by dimension and then
/// lexicographically by index set. Throws CapExceeded when 2^dim > max_subsets.
std::vector<Subspace> enumerate_coordinate_ideals(const LieAlgebra& L, std::uint64_t max_subsets = kDefaultBruteCap);

struct IdealClassification {
    std::size_t n = 0;
    std::vector<std::size_t> suffix_ideals; // m with A_{m,n} an ideal
    std::vector<std::size_t> skip_ideals;   // m with span{T_{m-2}} + A_{m,n} an ideal
    std::vector<Subspace> other;            // brute-force ideals of neither shape
    bool cross_checked = false;             // brute force was run

    /// Materialises the suffix, skip and other ideals, sorted like
    /// enumerate_coordinate_ideals.
    std::vector<Subspace> subspaces(const FieldDesc& field = {}) const;
};

/// For the mod-3 map the closed form is: suffixes m = 0..n+1 and skip
/// ideals for 2 <= m <= n+1 with m = 0 mod 3. It is cross-validated against
/// brute force when 2^(n+1) <= max_subsets and any disagreement throws
/// InternalInconsistency. Other hats are classified by brute force only.
IdealClassification classify_ideals_An(std::size_t n, const HatSpec& hat = HatSpec::mod3_balanced(),
                                       std::uint64_t max_subsets = kDefaultBruteCap);

/// T_i -> -T_{i + w(i)}; undefined (nullopt) when n = 1 mod 3.
std::optional<LinearMap> hat_shift_automorphism(std::size_t n);

std::int64_t mod3_hat(std::int64_t i);

} // namespace liealg

#endif // LIEALG_HAT_FAMILY_HPP
