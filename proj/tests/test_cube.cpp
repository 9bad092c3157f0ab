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

#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace serendipity;
using serendipity::testing::poly;

TEST(Faces, Counts)
{
    EXPECT_EQ(enumerate_faces(3, 2).size(), 6U);
    EXPECT_EQ(enumerate_faces(3, 1).size(), 12U);
    EXPECT_EQ(enumerate_faces(5, 0).size(), 32U);
    EXPECT_THROW(enumerate_faces(3, 4), std::invalid_argument);
}

TEST(Faces, CountFormulaAndTotal)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t total = 0;
        for (std::size_t d = 0; d <= n; ++d) {
            const auto faces = enumerate_faces(n, d);
            EXPECT_EQ(faces.size(), ipow(2, static_cast<unsigned>(n - d)) * binomial(n, d));
            std::set<Face> distinct(faces.begin(), faces.end());
            EXPECT_EQ(distinct.size(), faces.size());
            for (const auto& f : faces) {
                EXPECT_EQ(f.dimension(), d);
            }
            total += faces.size();
        }
        EXPECT_EQ(total, ipow(3, static_cast<unsigned>(n)));
    }
}

TEST(Faces, CanonicalOrder)
{
    const auto edges = enumerate_faces(2, 1);
    ASSERT_EQ(edges.size(), 4U);
    EXPECT_EQ(edges[0], Face::facet(2, 0, -1));
    EXPECT_EQ(edges[1], Face::facet(2, 0, +1));
    EXPECT_EQ(edges[2], Face::facet(2, 1, -1));
    EXPECT_EQ(edges[3], Face::facet(2, 1, +1));
    const auto vertices = enumerate_faces(2, 0);
    EXPECT_EQ(vertices.front(), Face::vertex({-1, -1}));
    EXPECT_EQ(vertices[1], Face::vertex({-1, 1}));
    EXPECT_EQ(vertices.back(), Face::vertex({1, 1}));
    const auto all = enumerate_all_faces(3);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Faces, Contains)
{
    const Face cube(3);
    for (const auto& v : enumerate_faces(3, 0)) {
        EXPECT_TRUE(face_contains(cube, v));
    }
    EXPECT_TRUE(face_contains(Face::facet(3, 0, 1), Face::vertex({1, 1, 1})));
    EXPECT_FALSE(face_contains(Face::facet(3, 0, 1), Face::vertex({-1, 1, 1})));
    EXPECT_THROW(face_contains(Face(2), Face(3)), std::invalid_argument);
}

TEST(Faces, ContainmentIsPartialOrder)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto faces = enumerate_all_faces(n);
        for (const auto& a : faces) {
            EXPECT_TRUE(face_contains(a, a));
            for (const auto& b : faces) {
                if (a != b && face_contains(a, b)) {
                    EXPECT_FALSE(face_contains(b, a));
                }
                if (!face_contains(a, b)) {
                    continue;
                }
                for (const auto& c : faces) {
                    if (face_contains(b, c)) {
                        EXPECT_TRUE(face_contains(a, c));
                    }
                }
            }
        }
    }
}

TEST(Faces, Restrict)
{
    EXPECT_EQ(restrict_to_face(poly(2, {{{1, 2}, 1}}), Face::facet(2, 0, -1)), poly(2, {{{0, 2}, -1}}));
    EXPECT_TRUE(restrict_to_face(poly(2, {{{0, 0}, 1}, {{2, 0}, -1}}), Face::facet(2, 0, 1)).is_zero());

    std::mt19937_64 rng(3);
    const auto p = serendipity::testing::random_polynomial(rng, 3, 8, 3);
    std::vector<Rational> ones = {1, 1, 1};
    EXPECT_EQ(restrict_to_face(p, Face::vertex({1, 1, 1})),
              Polynomial(3, p.evaluate(std::span<const Rational>(ones))));
}

TEST(Faces, IntegrateFace)
{
    EXPECT_EQ(integrate_face(poly(2, {{{2, 0}, 1}}), Face::facet(2, 1, 1)), Rational(2, 3));
    EXPECT_EQ(integrate_face(poly(2, {{{1, 1}, 1}}), Face::vertex({1, 1})), Rational(1));
    EXPECT_EQ(integrate_face(poly(2, {{{1, 1}, 1}}), Face(2)), Rational(0));
}

TEST(FacesProperty, IntegrationAndRestrictionAgree)
{
    std::mt19937_64 rng(19);
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto faces = enumerate_all_faces(n);
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) {
            all[i] = i;
        }
        for (int trial = 0; trial < 10; ++trial) {
            const auto p = serendipity::testing::random_polynomial(rng, n, 8, 4);
            EXPECT_EQ(Polynomial(n, integrate_face(p, Face(n))), p.integrate_box(all));
            for (const auto& f : faces) {
                const auto trace = restrict_to_face(p, f);
                // Trace is supported on free indices only and degree₂ does not grow.
                for (const auto& [m, c] : trace.terms()) {
                    for (auto j : f.fixed_indices()) {
                        EXPECT_EQ(m[j], 0U);
                    }
                }
                EXPECT_LE(trace.superlinear_degree(), p.superlinear_degree());
                EXPECT_EQ(Polynomial(n, integrate_face(p, f)), trace.integrate_box(f.free_indices()));
                // Restriction along a chain f ⊃ g equals direct restriction to g.
                for (const auto& g : faces) {
                    if (face_contains(f, g)) {
                        EXPECT_EQ(restrict_to_face(trace, g), restrict_to_face(p, g));
                    }
                }
            }
        }
    }
}
