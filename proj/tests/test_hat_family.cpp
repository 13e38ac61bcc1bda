#include "liealg/errors.hpp"
#include "liealg/hat_family.hpp"
#include "liealg/selfdual.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace liealg;
using testing_support::mask_of;
using testing_support::tensor_of;

namespace {

const FieldDesc Q = FieldDesc::rationals();

std::vector<std::uint64_t> masks(const std::vector<Subspace>& v)
{
    std::vector<std::uint64_t> out;
    for (const auto& s : v) out.push_back(mask_of(s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("hat values")
{
    const HatSpec m3 = HatSpec::mod3_balanced();
    CHECK(m3(-2) == 1);
    CHECK(m3(2) == -1);
    CHECK(m3(3) == 0);
    for (std::int64_t i = -40; i <= 40; ++i) CHECK(m3(i) == oracle::mod3(i));
    CHECK(hat_eval(HatSpec::identity(), 7) == 7);
    CHECK(hat_eval(HatSpec::mod_range(2, {0, 1}), -1) == 1);
    CHECK(HatSpec::zmod(5)(-1) == 4);
    CHECK(HatSpec::mod_range(3, {-1, 0, 1}) == HatSpec::mod_range(3, {-1, 0, 1}));
    CHECK_THROWS_AS(HatSpec::mod_range(3, {0, 1, 3}), InvalidInput);
    CHECK_THROWS_AS(HatSpec::mod_range(2, {0}), InvalidInput);
    CHECK_THROWS_AS(HatSpec::zmod(1), InvalidInput);
    CHECK(HatSpec::zmod(7).name() == "zmod:7");
    CHECK(HatSpec::mod_range(2, {0, 1}).name() == "range:2:0,1");
}

TEST_CASE("hat properties")
{
    const auto m3 = hat_properties(HatSpec::mod3_balanced(), -20, 20);
    CHECK(m3.multiplicative);
    CHECK(m3.add1);
    CHECK(m3.add2);
    CHECK_FALSE(m3.additive);
    const HatSpec h = HatSpec::mod3_balanced();
    CHECK(h(1) + h(1) != h(2));

    const auto id = hat_properties(HatSpec::identity(), -20, 20);
    CHECK((id.multiplicative && id.add1 && id.add2 && id.additive));

    const auto r2 = hat_properties(HatSpec::mod_range(2, {0, 1}), -20, 20);
    CHECK(r2.multiplicative);
    CHECK(r2.add2);
    CHECK_FALSE(r2.add1); // w(-1) = 1 != -w(1)
    REQUIRE(r2.add1_witness);
}

TEST_CASE("Jacobi hat scan")
{
    CHECK_FALSE(jacobi_hat_scan(HatSpec::mod3_balanced(), 0, 30).has_value());
    CHECK_FALSE(jacobi_hat_scan(HatSpec::identity(), 0, 30).has_value());
    CHECK_FALSE(jacobi_hat_scan(HatSpec::zmod(3), 0, 20).has_value());
    auto w = jacobi_hat_scan(HatSpec::mod_range(2, {0, 1}), 0, 10);
    REQUIRE(w);
    CHECK((w->i == 1 && w->j == 0 && w->k == 0));
    CHECK((w->c_ijk == 1 && w->c_jki == 0 && w->c_kij == 1));
    CHECK(jacobi_coefficient(1, 0, 0) == 1);
    CHECK(jacobi_coefficient(0, 0, 1) == 0);
    CHECK(jacobi_coefficient(0, 1, 0) == -1);
}

TEST_CASE("build_An tables")
{
    const LieAlgebra a3 = build_An(3);
    REQUIRE(a3.records().size() == 3);
    CHECK(a3.structure_constant(0, 1, 1) == Scalar(Q, -1));
    CHECK(a3.structure_constant(0, 2, 2) == Scalar(Q, 1));
    CHECK(a3.structure_constant(1, 2, 3) == Scalar(Q, -1));
    CHECK(build_An(0).dim() == 1);
    CHECK(build_An(0).is_abelian());
    CHECK(build_An(0, HatSpec::identity()).is_abelian());

    const LieAlgebra witt = build_An(6, HatSpec::identity());
    CHECK(tensor_of(witt).c ==
          oracle::an_tensor(6, [](std::int64_t i) { return i; }).c);
    CHECK_FALSE(check_jacobi(witt).has_value());
    for (std::size_t n = 0; n <= 12; ++n) CHECK(tensor_of(build_An(n)).c == oracle::an_tensor(n).c);

    const LieAlgebra z5 = build_An(AnSpec(6, HatSpec::zmod(5)));
    CHECK(z5.field() == FieldDesc::prime(5));
    CHECK(z5.structure_constant(0, 1, 1) == Scalar(FieldDesc::prime(5), 4));
    CHECK_THROWS_AS(AnSpec(3, HatSpec::zmod(5), Q), InvalidInput);
    CHECK_THROWS_AS(AnSpec(3, HatSpec::mod3_balanced(), FieldDesc::prime(2)), InvalidInput);
}

TEST_CASE("nonzero bracket count of A_6")
{
    std::size_t count = 0;
    for (std::int64_t i = 0; i <= 6; ++i)
        for (std::int64_t j = i + 1; i + j <= 6; ++j)
            if (oracle::mod3(i - j) != 0) ++count;
    CHECK(count == 9);
    CHECK(build_An(6).records().size() == count);
}

TEST_CASE("suffix and skip subspaces")
{
    CHECK(suffix_subspace(6, 3) == Subspace::coordinate(Q, 7, {3, 4, 5, 6}));
    CHECK(suffix_subspace(6, 7).dim() == 0);
    CHECK(suffix_subspace(6, 0) == Subspace::whole(Q, 7));
    CHECK_THROWS_AS(suffix_subspace(6, 8), RangeError);
    CHECK(skip_subspace(6, 3) == Subspace::coordinate(Q, 7, {1, 3, 4, 5, 6}));
    CHECK(skip_subspace(5, 6) == Subspace::coordinate(Q, 6, {4}));
    CHECK_THROWS_AS(skip_subspace(6, 1), RangeError);
    CHECK_THROWS_AS(skip_subspace(6, 8), RangeError);
}

TEST_CASE("canonical metric")
{
    const BilinearForm g = canonical_metric(3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(g.entry(i, j) == Scalar(Q, i + j == 3 ? 1 : 0));
    CHECK(det(g.matrix()).is_one());
    const BilinearForm g5 = canonical_metric(3, 5);
    CHECK(g5.entry(0, 0) == Scalar(Q, 5));
    CHECK(det(g5.matrix()).rational() == oracle::det_by_permutations(testing_support::dense(g5.matrix())));
    CHECK(g5.is_nondegenerate());
    CHECK_FALSE(is_invariant(build_An(4), canonical_metric(4)));

    for (std::size_t n = 0; n <= 30; n += 3)
        for (const Scalar& b : {Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, -7, 3)}) {
            const BilinearForm m = canonical_metric(n, b);
            CHECK(is_invariant(build_An(n), m));
            CHECK(m.is_nondegenerate());
        }
    for (std::size_t n : {3, 6, 9})
        CHECK(oracle::invariant(oracle::an_tensor(n), testing_support::dense(canonical_metric(n, Scalar(Q, -7, 3)).matrix())));
}

TEST_CASE("metric shift is a multiple of the Killing form")
{
    for (std::size_t n = 3; n <= 12; n += 3) {
        const Matrix diff = canonical_metric(n, 1).matrix() - canonical_metric(n, 0).matrix();
        const Matrix k = killing_form(build_An(n)).matrix();
        REQUIRE_FALSE(k(0, 0).is_zero());
        CHECK(diff == (diff(0, 0) / k(0, 0)) * k);
    }
}

TEST_CASE("single-diagonal metric solver")
{
    auto r6 = single_diagonal_metric_solve(6);
    REQUIRE(r6.exists);
    REQUIRE(r6.ansatz);
    CHECK(r6.ansatz->weights == std::vector<Scalar>(7, Scalar(Q, 1)));
    CHECK(r6.ansatz->metric() == canonical_metric(6));
    CHECK_FALSE(single_diagonal_metric_solve(5).exists);
    CHECK_FALSE(single_diagonal_metric_solve(6, HatSpec::identity()).exists);
    CHECK_FALSE(single_diagonal_metric_solve(9, HatSpec::identity()).exists);
    for (std::size_t n = 0; n <= 30; ++n) {
        auto r = single_diagonal_metric_solve(n);
        CHECK(r.exists == (n % 3 == 0));
        if (r.exists) {
            CHECK(r.solution_dim == 1);
            CHECK(r.ansatz->weights == std::vector<Scalar>(n + 1, Scalar(Q, 1)));
        }
    }
    // over F_3 the map is still zero on multiples of 3
    CHECK(single_diagonal_metric_solve(6, HatSpec::zmod(3)).exists == single_diagonal_metric_solve(6).exists);
}

TEST_CASE("coordinate ideal enumeration")
{
    const std::vector<std::size_t> golden{2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 18};
    for (std::size_t n = 0; n < golden.size(); ++n) {
        const auto o = oracle::coordinate_ideal_masks(oracle::an_tensor(n));
        CHECK(o.size() == golden[n]);
        CHECK(masks(enumerate_coordinate_ideals(build_An(n))) == o);
    }
    const auto a6 = enumerate_coordinate_ideals(build_An(6));
    REQUIRE(a6.size() == 10);
    CHECK(a6[2] == Subspace::coordinate(Q, 7, {4, 6}));
    CHECK(a6[6] == Subspace::coordinate(Q, 7, {1, 3, 4, 5, 6}));
    CHECK(enumerate_coordinate_ideals(LieAlgebra::abelian(Q, 3)).size() == 8);
    const auto a3 = enumerate_coordinate_ideals(build_An(3));
    CHECK(a3.size() == 6);
    CHECK(std::find(a3.begin(), a3.end(), Subspace::coordinate(Q, 4, {1, 3})) != a3.end());
    CHECK_THROWS_AS(enumerate_coordinate_ideals(build_An(6), 64), CapExceeded);
}

TEST_CASE("closed-form ideal classification")
{
    auto c6 = classify_ideals_An(6);
    CHECK(c6.skip_ideals == std::vector<std::size_t>{3, 6});
    CHECK(c6.suffix_ideals.size() == 8);
    CHECK(c6.other.empty());
    CHECK(c6.cross_checked);
    CHECK(classify_ideals_An(3).skip_ideals == std::vector<std::size_t>{3});
    auto c4 = classify_ideals_An(4);
    CHECK(c4.skip_ideals == std::vector<std::size_t>{3});
    CHECK(c4.suffix_ideals == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(classify_ideals_An(5).skip_ideals == std::vector<std::size_t>{3, 6});
    for (std::size_t n = 0; n <= 12; ++n) {
        auto c = classify_ideals_An(n);
        CHECK(c.cross_checked);
        CHECK(masks(c.subspaces()) == masks(enumerate_coordinate_ideals(build_An(n))));
        for (const auto& s : c.subspaces()) CHECK(is_ideal(build_An(n), s));
    }
    auto big = classify_ideals_An(20, HatSpec::mod3_balanced(), 1024);
    CHECK_FALSE(big.cross_checked);
    for (const auto& s : big.subspaces()) CHECK(is_ideal(build_An(20), s));
}

TEST_CASE("ideals for other hats come from brute force")
{
    auto w = classify_ideals_An(5, HatSpec::identity());
    CHECK(w.cross_checked);
    CHECK(masks(w.subspaces()) == masks(enumerate_coordinate_ideals(build_An(5, HatSpec::identity()))));
    auto f3 = classify_ideals_An(6, HatSpec::zmod(3));
    CHECK(masks(f3.subspaces()) == masks(enumerate_coordinate_ideals(build_An(6, HatSpec::zmod(3)))));
}

TEST_CASE("hat-shift automorphism")
{
    auto phi = hat_shift_automorphism(6);
    REQUIRE(phi);
    const Matrix& m = phi->matrix();
    CHECK(m(2, 1) == Scalar(Q, -1));
    CHECK(m(1, 2) == Scalar(Q, -1));
    CHECK(m(3, 3) == Scalar(Q, -1));
    CHECK(m(0, 0) == Scalar(Q, -1));
    CHECK(is_automorphism(build_An(6), *phi));
    CHECK(phi->image(skip_subspace(6, 3)) == suffix_subspace(6, 2));
    CHECK_FALSE(hat_shift_automorphism(7).has_value());
    for (std::size_t n = 0; n <= 30; ++n) {
        auto p = hat_shift_automorphism(n);
        CHECK(p.has_value() == (n % 3 != 1));
        if (!p) continue;
        CHECK(is_automorphism(build_An(n), *p));
        for (auto s : classify_ideals_An(n, HatSpec::mod3_balanced(), 0).skip_ideals)
            CHECK(p->image(skip_subspace(n, s)) == suffix_subspace(n, s - 1));
    }
}
