/*
   Copyright 2026 The serendipity-fe Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace serendipity;
using serendipity::testing::poly;

namespace {

const Rational kHalf(1, 2);

Polynomial sum_components(std::size_t n, const std::vector<FaceComponent>& parts)
{
    Polynomial out(n);
    for (const auto& c : parts) {
        out += c.component;
    }
    return out;
}

std::map<Face, FaceComponent> by_face(const std::vector<FaceComponent>& parts)
{
    std::map<Face, FaceComponent> out;
    for (const auto& c : parts) {
        out.emplace(c.face, c);
    }
    return out;
}

} // namespace

TEST(Bubble, Formula)
{
    EXPECT_EQ(bubble(Face(1)).poly, poly(1, {{{0}, 1}, {{2}, -1}}));
    EXPECT_EQ(bubble(Face::vertex({1, 1})).poly, poly(2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
    // (1 - x1²)(1 - x2)
    EXPECT_EQ(bubble(Face::facet(2, 1, -1)).poly, poly(2, {{{0, 0}, 1}, {{2, 0}, -1}, {{0, 1}, -1}, {{2, 1}, 1}}));
}

TEST(Bubble, VanishesOffFaceAndPositiveInside)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto facets = enumerate_faces(n, n - 1);
        for (const auto& f : enumerate_all_faces(n)) {
            const auto b = bubble(f).poly;
            for (const auto& F : facets) {
                if (!face_contains(F, f)) {
                    EXPECT_TRUE(restrict_to_face(b, F).is_zero());
                }
            }
            const auto center = f.barycenter();
            EXPECT_GT(b.evaluate(std::span<const Rational>(center)), 0);
        }
    }
}

TEST(SpaceV, Dimensions)
{
    const auto v = space_V(enumerate_faces(3, 2).front(), 6);
    EXPECT_EQ(v.size(), 6U);
    const auto vert = space_V(Face::vertex({1, -1}), 1);
    ASSERT_EQ(vert.size(), 1U);
    EXPECT_EQ(vert[0].component, bubble(Face::vertex({1, -1})).poly);
    EXPECT_TRUE(space_V(Face(2), 3).empty());

    for (std::size_t n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 8; ++r) {
            for (const auto& f : enumerate_all_faces(n)) {
                const auto d = static_cast<long>(f.dimension());
                const auto comps = space_V(f, r);
                EXPECT_EQ(comps.size(), binomial(r - d, d));
                for (const auto& c : comps) {
                    EXPECT_LE(c.component.superlinear_degree(), r);
                    EXPECT_LE(c.coefficient.degree(), r - 2 * d);
                }
            }
        }
    }
}

TEST(DirectSum, SmallCases)
{
    const auto a = verify_direct_sum(2, 2);
    EXPECT_EQ(a.sum_of_dims, 8U);
    EXPECT_TRUE(a.ok());
    const auto b = verify_direct_sum(3, 2);
    EXPECT_EQ(b.sum_of_dims, 20U);
    EXPECT_TRUE(b.ok());
    const auto c = verify_direct_sum(1, 4);
    EXPECT_EQ(c.sum_of_dims, 5U);
    EXPECT_TRUE(c.ok());
}

TEST(Decompose, Constant)
{
    const auto parts = decompose(Polynomial(1, Rational(1)), 1, 1);
    ASSERT_EQ(parts.size(), 2U);
    EXPECT_EQ(parts.at(Face::vertex({1})).component, poly(1, {{{0}, kHalf}, {{1}, kHalf}}));
    EXPECT_EQ(parts.at(Face::vertex({-1})).component, poly(1, {{{0}, kHalf}, {{1}, -kHalf}}));
}

TEST(Decompose, Linear)
{
    const auto parts = decompose(poly(1, {{{1}, 1}}), 1, 1);
    ASSERT_EQ(parts.size(), 2U);
    EXPECT_EQ(parts.at(Face::vertex({1})).coefficient, Polynomial(1, kHalf));
    EXPECT_EQ(parts.at(Face::vertex({-1})).coefficient, Polynomial(1, -kHalf));
}

TEST(Decompose, MixedMonomial)
{
    // x1·x2³ in S_3(I²): vertex components plus the two edges x1 = ±1, on
    // which x2 is free (values checked with a computer algebra system).
    const auto p = poly(2, {{{1, 3}, 1}});
    const auto parts = decompose(p, 2, 3);
    ASSERT_EQ(parts.size(), 6U);
    EXPECT_EQ(parts.at(Face::facet(2, 0, 1)).coefficient, poly(2, {{{0, 1}, -kHalf}}));
    EXPECT_EQ(parts.at(Face::facet(2, 0, -1)).coefficient, poly(2, {{{0, 1}, kHalf}}));
    EXPECT_EQ(parts.at(Face::vertex({1, 1})).coefficient, Polynomial(2, Rational(1, 4)));
    EXPECT_EQ(parts.at(Face::vertex({1, -1})).coefficient, Polynomial(2, Rational(-1, 4)));
    EXPECT_EQ(parts.at(Face::vertex({-1, 1})).coefficient, Polynomial(2, Rational(-1, 4)));
    EXPECT_EQ(parts.at(Face::vertex({-1, -1})).coefficient, Polynomial(2, Rational(1, 4)));
    EXPECT_EQ(reconstruct(2, parts), p);
}

TEST(Decompose, RejectsOutsideS)
{
    EXPECT_THROW(decompose(poly(2, {{{2, 2}, 1}}), 2, 3), std::domain_error);
    EXPECT_THROW(expand_monomial(Monomial{2, 2}, 3), std::domain_error);
}

TEST(Decompose, RandomRoundTrip)
{
    std::mt19937_64 rng(20110101);
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 4; ++r) {
            const GeometricDecomposition gd(n, r);
            for (int trial = 0; trial < 10; ++trial) {
                const auto p = serendipity::testing::random_serendipity(rng, gd.space());
                EXPECT_EQ(reconstruct(n, gd.decompose(p)), p);
            }
        }
    }
}

TEST(ExpandMonomial, OneDimensional)
{
    const auto one = expand_monomial(Monomial{0}, 1);
    EXPECT_EQ(by_face(one), decompose(Polynomial(1, Rational(1)), 1, 1));

    // x² = ½(1+x) + ½(1-x) + (1-x²)·(-1)
    const auto sq = by_face(expand_monomial(Monomial{2}, 2));
    ASSERT_EQ(sq.size(), 3U);
    EXPECT_EQ(sq.at(Face(1)).coefficient, Polynomial(1, Rational(-1)));
    EXPECT_EQ(sq.at(Face::vertex({1})).coefficient, Polynomial(1, kHalf));
    EXPECT_EQ(sq.at(Face::vertex({-1})).coefficient, Polynomial(1, kHalf));
}

TEST(ExpandMonomial, TrilinearHasEightVertexTerms)
{
    const auto parts = expand_monomial(Monomial{1, 1, 1}, 1);
    ASSERT_EQ(parts.size(), 8U);
    for (const auto& c : parts) {
        EXPECT_EQ(c.face.dimension(), 0U);
        EXPECT_EQ(c.coefficient, Polynomial(3, Rational(c.face.sign(0) * c.face.sign(1) * c.face.sign(2), 8)));
    }
    EXPECT_EQ(sum_components(3, parts), Polynomial(Monomial{1, 1, 1}));
}

TEST(ExpandMonomial, ReconstructsAndRespectsDegreeBounds)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 5; ++r) {
            for (const auto& m : basis_S(n, r).monomials) {
                const auto parts = expand_monomial(m, r);
                EXPECT_EQ(sum_components(n, parts), Polynomial(m));
                for (const auto& c : parts) {
                    const int dim = static_cast<int>(c.face.dimension());
                    EXPECT_LE(c.coefficient.degree(), r - 2 * dim);
                    for (const auto& [mono, coeff] : c.coefficient.terms()) {
                        for (auto j : c.face.fixed_indices()) {
                            EXPECT_EQ(mono[j], 0U);
                        }
                    }
                }
            }
        }
    }
}

TEST(ExpandMonomial, AgreesWithLinearSolve)
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (int r = 1; r <= 4; ++r) {
            const GeometricDecomposition gd(n, r);
            for (const auto& m : gd.space().monomials) {
                EXPECT_EQ(by_face(expand_monomial(m, r)), gd.decompose(Polynomial(m)))
                    << "n=" << n << " r=" << r << " " << m.to_string();
            }
        }
    }
}

TEST(BubbleFactor, Square)
{
    const auto rep = bubble_factor_nullspace_check(2, 4);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.facet_vanishing_dim, 1U);
    // ∫(1-x²)²(1-y²)² and ∫(1-x²)(1-y²) over I² by per-axis moments.
    EXPECT_EQ(rep.l2_gram(0, 0), Rational(256, 225));
    EXPECT_EQ(rep.moment_gram(0, 0), Rational(16, 9));

    const auto empty = bubble_factor_nullspace_check(2, 3);
    EXPECT_TRUE(empty.ok());
    EXPECT_EQ(empty.facet_vanishing_dim, 0U);
    EXPECT_EQ(empty.expected_dim, 0U);
}

TEST(BubbleFactor, Cube)
{
    const auto rep = bubble_factor_nullspace_check(3, 6);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.facet_vanishing_dim, 1U);
    EXPECT_EQ(rep.l2_gram(0, 0), Rational(4096, 3375));
    EXPECT_EQ(rep.moment_gram(0, 0), Rational(64, 27));
}

TEST(BubbleFactor, PerAxisMomentOracle)
{
    // Gram entries of B·P_{r-2n} factor into products of 1-D integrals
    // ∫(1-x²)^k x^a dx, computed here from the binomial expansion.
    auto axis_integral = [](unsigned power, unsigned a) {
        Rational total = 0;
        for (unsigned i = 0; i <= power; ++i) {
            const Rational term = Rational(static_cast<long>(binomial(power, i))) * interval_moment(a + 2 * i);
            total += (i % 2 == 0) ? term : Rational(-term);
        }
        return total;
    };
    for (std::size_t n = 1; n <= 2; ++n) {
        for (int r = 2 * static_cast<int>(n); r <= 8; ++r) {
            const auto rep = bubble_factor_nullspace_check(n, r);
            const auto inner = basis_P(n, r - 2 * static_cast<int>(n)).monomials;
            for (std::size_t a = 0; a < inner.size(); ++a) {
                for (std::size_t b = 0; b < inner.size(); ++b) {
                    Rational moment = 1;
                    Rational l2 = 1;
                    for (std::size_t i = 0; i < n; ++i) {
                        moment *= axis_integral(1, inner[a][i] + inner[b][i]);
                        l2 *= axis_integral(2, inner[a][i] + inner[b][i]);
                    }
                    EXPECT_EQ(rep.moment_gram(a, b), moment);
                    EXPECT_EQ(rep.l2_gram(a, b), l2);
                }
            }
        }
    }
}
