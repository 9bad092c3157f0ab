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

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace serendipity;

TEST(Assembly, SharedDofCounts)
{
    EXPECT_EQ(shared_dof_pairs(2, 2, 0).size(), 3U);
    EXPECT_EQ(shared_dof_pairs(2, 1, 0).size(), 2U);

    // S_4(I³), shared facet x3 = ±1: 4 vertices, 4 edges × 3, 1 face moment.
    const auto pairs = shared_dof_pairs(3, 4, 2);
    EXPECT_EQ(pairs.size(), 4U + 12U + 1U);
    std::size_t face_moments = 0;
    for (const auto& [l, r] : pairs) {
        EXPECT_EQ(l.face.sign(2), 1);
        EXPECT_EQ(r.face.sign(2), -1);
        EXPECT_EQ(l.weight, r.weight);
        EXPECT_EQ(l.face.dimension(), r.face.dimension());
        face_moments += l.face.dimension() == 2 ? 1 : 0;
    }
    EXPECT_EQ(face_moments, 1U);
}

TEST(Assembly, ContinuitySquare)
{
    const auto rep = check_continuity(2, 3, 0, 25, 1234);
    EXPECT_EQ(rep.trials.size(), 25U);
    EXPECT_TRUE(rep.continuous());
    EXPECT_TRUE(rep.controls_all_detected());
    EXPECT_TRUE(rep.trace_determinism());
    EXPECT_EQ(rep.seed, 1234U);
}

TEST(Assembly, ContinuityCube)
{
    for (std::size_t axis = 0; axis < 3; ++axis) {
        const auto rep = check_continuity(3, 2, axis, 10, 99);
        EXPECT_TRUE(rep.ok()) << "axis " << axis;
        for (const auto& t : rep.trials) {
            EXPECT_GT(t.controls_run, 0U);
        }
    }
}

TEST(Assembly, MismatchedValuesBreakContinuity)
{
    // Without copying the shared values the traces disagree.
    const auto e = serendipity_element(2, 2);
    const ElementPair pair(2, 0);
    std::vector<Rational> left(e.dofs.size(), Rational(0));
    std::vector<Rational> right(e.dofs.size(), Rational(0));
    const auto shared = shared_dof_indices(e.dofs, pair);
    left[shared.front().first] = 1;
    EXPECT_NE(restrict_to_face(e.combine(left), pair.left_face()),
              restrict_to_face(e.combine(right), pair.right_face()));
}

TEST(Assembly, SeedDeterminism)
{
    const auto a = check_continuity(2, 2, 1, 5, 7);
    const auto b = check_continuity(2, 2, 1, 5, 7);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (std::size_t t = 0; t < a.trials.size(); ++t) {
        EXPECT_EQ(a.trials[t].left_values, b.trials[t].left_values);
        EXPECT_EQ(a.trials[t].left_trace, b.trials[t].left_trace);
    }
}

TEST(Assembly, InvalidAxis)
{
    EXPECT_THROW(ElementPair(2, 2), std::invalid_argument);
}
