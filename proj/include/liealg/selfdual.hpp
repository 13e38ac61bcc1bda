#ifndef LIEALG_SELFDUAL_HPP
#define LIEALG_SELFDUAL_HPP

#include "liealg/hat_family.hpp"
#include "liealg/lie_algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

struct InvarianceDefect {
    std::size_t k, i, j;
    Scalar value; // ([x_k,x_i],x_j) + (x_i,[x_k,x_j])
};

/// First basis triple (k, i, j) violating ad-invariance, scanned directly
/// from brackets (independent of the solver below).
std::optional<InvarianceDefect> invariance_defect(const LieAlgebra& L, const BilinearForm& b);
bool is_invariant(const LieAlgebra& L, const BilinearForm& b);

/// Basis of the symmetric ad-invariant forms. Coordinates are the upper
/// triangle (i <= j) in row-major order and the basis is the canonical RREF
/// of the solution space in those coordinates.
std::vector<BilinearForm> invariant_form_space(const LieAlgebra& L);

struct MetricSearchOptions {
    std::int64_t coefficient_bound = 5;    // integer combinations in [-K, K]
    std::size_t max_combinations = 200000; // after the basis elements themselves
};

/// Deterministic search for a non-degenerate element of the invariant form
/// space: each basis element, then integer combinations in lexicographic
/// order. nullopt only means nothing was found at this depth.
std::optional<BilinearForm> nondegenerate_invariant_metric(const LieAlgebra& L, const MetricSearchOptions& opts = {});

enum class SelfDuality { Yes, No, Unknown };

std::string to_string(SelfDuality s);

struct SelfDualVerdict {
    SelfDuality status = SelfDuality::Unknown;
    std::optional<BilinearForm> metric; // set when status == Yes
    std::size_t form_space_dim = 0;
    std::string certificate;            // explanation for No / Unknown
};

/*
 * Tri-state self-duality.
 *
 * Yes carries a metric. No is only returned with an exact certificate: the
 * generic determinant det(sum_a t_a B_a) of the invariant form space is the
 * zero polynomial. That polynomial has degree <= dim in each t_a, so it is
 * zero iff it vanishes on the grid {0..dim}^d; the grid is evaluated when
 * d <= 4, dim <= 10 and the field has more than dim elements. Anything else
 * the search cannot settle is Unknown.
 */
SelfDualVerdict is_self_dual(const LieAlgebra& L, const MetricSearchOptions& opts = {});

/// {x : b(x, s) = 0 for all s in S}; throws InvalidInput for degenerate b.
Subspace orthogonal_complement(const BilinearForm& b, const Subspace& s);

struct Decomposition {
    Subspace first;  // ideal with non-degenerate restriction
    Subspace second; // its orthogonal complement, also an ideal
};

/// Looks for an orthogonal splitting L = J + J^perp among the given ideals
/// (J proper, nonzero, b non-degenerate on J, J^perp an ideal).
std::optional<Decomposition> decomposability_check(const LieAlgebra& L, const BilinearForm& b,
                                                   const std::vector<Subspace>& ideals);
/// Same, with the candidate list from enumerate_coordinate_ideals.
std::optional<Decomposition> decomposability_check(const LieAlgebra& L, const BilinearForm& b,
                                                   std::uint64_t max_subsets = kDefaultBruteCap);
/// A_n with the given metric, candidates from classify_ideals_An.
std::optional<Decomposition> decomposability_check_An(std::size_t n, const BilinearForm& b);

/// Algebra plus invariant metric, with the sizes of its three basis blocks.
struct MetricAlgebra {
    LieAlgebra algebra;
    BilinearForm metric;
    std::array<std::size_t, 3> blocks{}; // (B, A, B*) or (B0, P, B0~)
};

struct DoubleExtensionInput {
    std::size_t a_dim = 0;  // Abelian algebra A
    BilinearForm omega;     // non-degenerate form on A
    LieAlgebra b;           // acting algebra B, dim r
    std::vector<Matrix> action; // rho_b for each basis vector of B; column c is rho_b(a_c)
    std::optional<BilinearForm> f; // invariant form on B, zero when absent
};

/*
 * D = B + A + B* on the ordered basis (b_i, a_c, beta_i):
 *
 *   [b_i, b_j]   = [b_i, b_j]_B
 *   [b_i, a]     = rho_i a
 *   [a, a']      = sum_i omega(rho_i a, a') beta_i
 *   [b_i, beta]  = -beta o ad_{b_i}
 *   [a, beta] = [beta, beta'] = 0
 *
 * metric: f on B x B, beta_i(b_j) = delta_ij, omega on A x A, zero on B* x B*.
 * The input invariants are checked (InvalidInput) and the output must pass
 * Jacobi, invariance and non-degeneracy (PostconditionFailure otherwise).
 */
MetricAlgebra double_extend(const DoubleExtensionInput& in);

struct ContractionInput {
    LieAlgebra s0;
    BilinearForm omega0; // invariant, non-degenerate
    Subspace b0;         // nonzero proper subalgebra, omega0 non-degenerate on it
};

/*
 * Contraction of S0 along B0 with P = B0^perp, on the basis (B0, P, B0~):
 *
 *   [b, b']  = [b, b']            [b, p]  = [b, p]   (lies in P)
 *   [p, p']  = (pi_B0 [p, p'])~   [b, z~] = ([b, z])~
 *   B0~ central in P + B0~
 *
 * metric: omega0 on B0 x B0 and P x P, (b, z~) = omega0(b, z), zero on
 * B0~ x B0~. Postconditions as for double_extend.
 */
MetricAlgebra wigner_contract(const ContractionInput& in);

/// m in {1, 2} such that A_n = B + A_{m,n} with dim[A_{m,n}, A_{m,n}] <= m
/// and dim A_n >= 2 dim B. Requires n = 0 mod 3.
std::vector<std::size_t> double_extension_candidates_An(std::size_t n);

/// [A_{m,n}, A_{m,n}] == A_{min(2m+1, n+1), n}; requires m <= n.
bool derived_suffix_check(std::size_t n, std::size_t m);

enum class DeeperClass { WignerObtainable, AbelianDoubleExtensionOnly, Deeper };

std::string to_string(DeeperClass c);

struct DeeperVerdict {
    std::size_t n = 0;
    std::vector<std::size_t> candidates;
    std::vector<bool> candidate_b_self_dual; // parallel to candidates
    DeeperClass verdict = DeeperClass::Deeper;
};

/// Requires n = 0 mod 3 and n >= 3 (A_0 is Abelian).
DeeperVerdict deeper_check_An(std::size_t n);

/// Isomorphism invariants used to compare algebras given in different bases.
struct InvariantProfile {
    std::size_t dim = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lower_central_dims;
    std::size_t center_dim = 0;
    bool solvable = false;
    bool nilpotent = false;
    SelfDuality self_dual = SelfDuality::Unknown;

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const LieAlgebra& L);

} // namespace liealg

#endif // LIEALG_SELFDUAL_HPP
