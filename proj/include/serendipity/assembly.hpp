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

#ifndef SERENDIPITY_ASSEMBLY_HPP
#define SERENDIPITY_ASSEMBLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cube.hpp"
#include "dofs.hpp"
#include "polynomial.hpp"

namespace serendipity {

/// Two unit cubes sharing a facet: the left one is [-1,1]^n, the right one is
/// its translate by 2 along `axis`. In local coordinates the shared facet is
/// {x_axis = +1} on the left and {x_axis = -1} on the right; the remaining
/// coordinates are identified by the identity map.
struct ElementPair {
    std::size_t n = 0;
    std::size_t axis = 0;

    ElementPair(std::size_t n_, std::size_t axis_) : n(n_), axis(axis_)
    {
        if (axis >= n) {
            throw std::invalid_argument("axis out of range");
        }
    }

    [[nodiscard]] Face left_face() const { return Face::facet(n, axis, +1); }
    [[nodiscard]] Face right_face() const { return Face::facet(n, axis, -1); }

    /// A face of the left element lying in the shared facet, seen from the right element.
    [[nodiscard]] Face to_right(const Face& left) const
    {
        auto c = left.coords();
        c[axis] = -1;
        return Face(std::move(c));
    }
};

/// Index pairs (left DOF, right DOF) that act on the shared facet and its
/// subfaces, matched by face under the identification and by weight.
inline std::vector<std::pair<std::size_t, std::size_t>> shared_dof_indices(const std::vector<DofFunctional>& dofs,
                                                                           const ElementPair& pair)
{
    std::map<std::pair<Face, std::vector<unsigned>>, std::size_t> right_index;
    auto weight_key = [](const DofFunctional& L) {
        if (L.weight.size() != 1) {
            throw std::invalid_argument("shared DOF matching expects monomial weights");
        }
        return L.weight.terms().begin()->first.exponents();
    };
    const Face right = pair.right_face();
    for (std::size_t i = 0; i < dofs.size(); ++i) {
        if (face_contains(right, dofs[i].face)) {
            right_index.emplace(std::make_pair(dofs[i].face, weight_key(dofs[i])), i);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const Face left = pair.left_face();
    for (std::size_t i = 0; i < dofs.size(); ++i) {
        if (!face_contains(left, dofs[i].face)) {
            continue;
        }
        auto it = right_index.find({pair.to_right(dofs[i].face), weight_key(dofs[i])});
        if (it == right_index.end()) {
            throw std::logic_error("shared DOF has no partner on the neighbouring element");
        }
        out.emplace_back(i, it->second);
    }
    return out;
}

inline std::vector<std::pair<DofFunctional, DofFunctional>> shared_dof_pairs(std::size_t n, int r, std::size_t axis)
{
    const auto dofs = dofs_S(n, r);
    std::vector<std::pair<DofFunctional, DofFunctional>> out;
    for (auto [l, rr] : shared_dof_indices(dofs, ElementPair(n, axis))) {
        out.emplace_back(dofs[l], dofs[rr]);
    }
    return out;
}

struct ContinuityTrial {
    std::vector<Rational> left_values;
    std::vector<Rational> right_values;
    Polynomial left_trace;
    Polynomial right_trace;
    bool equal = false;
    bool trace_determined_by_face_dofs = false;
    std::size_t controls_run = 0;
    std::size_t controls_detected = 0;
};

struct ContinuityReport {
    std::size_t n = 0;
    int r = 0;
    std::size_t axis = 0;
    std::uint64_t seed = 0;
    std::size_t shared_dofs = 0;
    std::vector<ContinuityTrial> trials;

    [[nodiscard]] bool continuous() const noexcept
    {
        for (const auto& t : trials) {
            if (!t.equal) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool controls_all_detected() const noexcept
    {
        for (const auto& t : trials) {
            if (t.controls_detected != t.controls_run) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool trace_determinism() const noexcept
    {
        for (const auto& t : trials) {
            if (!t.trace_determined_by_face_dofs) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool ok() const noexcept { return continuous() && controls_all_detected() && trace_determinism(); }
};

/// Random two-element trials. DOF values are integers in [-9, 9]; the right
/// element copies the left values on shared DOFs. Each trial compares the
/// two traces on the shared facet exactly, checks that the left trace depends
/// only on the shared-face DOFs, and perturbs each shared right DOF by one
/// in turn, expecting the traces to differ.
inline ContinuityReport check_continuity(const NodalElement& element, std::size_t axis, std::size_t trials,
                                         std::uint64_t seed)
{
    const std::size_t n = element.basis.n;
    const ElementPair pair(n, axis);
    const auto shared = shared_dof_indices(element.dofs, pair);
    const std::size_t count = element.dofs.size();

    ContinuityReport rep;
    rep.n = n;
    rep.r = element.basis.degree;
    rep.axis = axis;
    rep.seed = seed;
    rep.shared_dofs = shared.size();

    std::vector<Polynomial> right_traces;
    right_traces.reserve(count);
    for (const auto& phi : element.shape_functions) {
        right_traces.push_back(restrict_to_face(phi, pair.right_face()));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (std::size_t t = 0; t < trials; ++t) {
        ContinuityTrial trial;
        trial.left_values.resize(count);
        trial.right_values.resize(count);
        for (auto& v : trial.left_values) {
            v = dist(rng);
        }
        for (auto& v : trial.right_values) {
            v = dist(rng);
        }
        for (auto [l, r] : shared) {
            trial.right_values[r] = trial.left_values[l];
        }
        const Polynomial left = element.combine(trial.left_values);
        const Polynomial right = element.combine(trial.right_values);
        trial.left_trace = restrict_to_face(left, pair.left_face());
        trial.right_trace = restrict_to_face(right, pair.right_face());
        trial.equal = trial.left_trace == trial.right_trace;

        std::vector<Rational> face_only(count);
        for (auto [l, r] : shared) {
            face_only[l] = trial.left_values[l];
        }
        trial.trace_determined_by_face_dofs =
            restrict_to_face(element.combine(face_only), pair.left_face()) == trial.left_trace;

        for (auto [l, r] : shared) {
            Polynomial perturbed = trial.right_trace + right_traces[r];
            ++trial.controls_run;
            if (perturbed != trial.left_trace) {
                ++trial.controls_detected;
            }
        }
        rep.trials.push_back(std::move(trial));
    }
    return rep;
}

inline ContinuityReport check_continuity(std::size_t n, int r, std::size_t axis, std::size_t trials,
                                         std::uint64_t seed)
{
    return check_continuity(serendipity_element(n, r), axis, trials, seed);
}

} // namespace serendipity

#endif // SERENDIPITY_ASSEMBLY_HPP
