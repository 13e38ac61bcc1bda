#ifndef LIEALG_TESTS_SUPPORT_HPP
#define LIEALG_TESTS_SUPPORT_HPP

#include "liealg/hat_family.hpp"
#include "liealg/lie_algebra.hpp"

#include "oracles.hpp"

#include <string>

namespace testing_support {

inline oracle::Tensor tensor_of(const liealg::LieAlgebra& L)
{
    oracle::Tensor t(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
            liealg::Vector v = L.basis_bracket(i, j);
            for (std::size_t k = 0; k < L.dim(); ++k) t.at(i, j, k) = v[k].rational();
        }
    return t;
}

inline oracle::Mat dense(const liealg::Matrix& m)
{
    oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).rational();
    return out;
}

inline std::uint64_t mask_of(const liealg::Subspace& s)
{
    std::uint64_t m = 0;
    const auto idx = s.coordinate_indices().value();
    for (auto i : idx) m |= std::uint64_t{1} << i;
    return m;
}

inline liealg::Vector vec(const liealg::FieldDesc& f, std::initializer_list<std::int64_t> xs)
{
    liealg::Vector v;
    for (auto x : xs) v.emplace_back(f, x);
    return v;
}

/// [R0, R1] = R1
inline liealg::LieAlgebra nonabelian2()
{
    const liealg::FieldDesc q;
    return liealg::LieAlgebra(q, 2, {{0, 1, {{1, liealg::Scalar(q, 1)}}}}, {"R0", "R1"});
}

/// so(2,1): [e0,e1] = e2, [e0,e2] = -e1, [e1,e2] = -e0; e0 spans a rotation line.
inline liealg::LieAlgebra so21()
{
    const liealg::FieldDesc q;
    using liealg::Scalar;
    return liealg::LieAlgebra(q, 3,
                              {{0, 1, {{2, Scalar(q, 1)}}}, {0, 2, {{1, Scalar(q, -1)}}}, {1, 2, {{0, Scalar(q, -1)}}}},
                              {"e0", "e1", "e2"});
}

/// sl(2): [H,E] = 2E, [H,F] = -2F, [E,F] = H
inline liealg::LieAlgebra sl2()
{
    const liealg::FieldDesc q;
    using liealg::Scalar;
    return liealg::LieAlgebra(q, 3,
                              {{0, 1, {{1, Scalar(q, 2)}}}, {0, 2, {{2, Scalar(q, -2)}}}, {1, 2, {{0, Scalar(q, 1)}}}},
                              {"H", "E", "F"});
}

} // namespace testing_support

#endif // LIEALG_TESTS_SUPPORT_HPP
