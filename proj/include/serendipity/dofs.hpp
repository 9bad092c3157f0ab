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

#ifndef SERENDIPITY_DOFS_HPP
#define SERENDIPITY_DOFS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bubble.hpp"
#include "cube.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "spaces.hpp"

namespace serendipity {

/// The moment functional u ↦ ∫_f u·weight (point evaluation times weight on
/// a vertex). `weight` is supported on the free variables of `face`.
struct DofFunctional {
    Face face;
    Polynomial weight;
    std::size_t id = 0;
};

inline Rational apply_dof(const DofFunctional& dof, const Polynomial& p)
{
    if (p.dimension() != dof.face.ambient_dimension()) {
        throw std::invalid_argument("DOF and polynomial live in different dimensions");
    }
    // ∫_f p·q evaluated term by term; equal to integrate_face(p * weight, face).
    Rational total = 0;
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : dof.weight.terms()) {
            const Rational v = integrate_monomial_on_face(mp * mq, dof.face);
            if (v != 0) {
                total += cp * cq * v;
            }
        }
    }
    return total;
}

namespace detail {

// Q_s(f): every free exponent ≤ s, graded-lex.
inline std::vector<Monomial> tensor_monomials_on_face(const Face& f, int s)
{
    std::vector<Monomial> out;
    if (s < 0) {
        return out;
    }
    const auto free = f.free_indices();
    for (const auto& m : monomials_up_to_degree(f.ambient_dimension(), free, s * static_cast<int>(free.size()))) {
        if (static_cast<int>(m.max_exponent()) <= s) {
            out.push_back(m);
        }
    }
    return out;
}

} // namespace detail

/// Serendipity DOFs: on each d-face, moments against P_{r-2d}(f). Ordered by
/// face dimension, then canonical face order, then weight monomial order.
inline std::vector<DofFunctional> dofs_S(std::size_t n, int r)
{
    if (r < 1) {
        throw std::invalid_argument("S_r requires r >= 1");
    }
    std::vector<DofFunctional> out;
    for (std::size_t d = 0; d <= n; ++d) {
        const int s = r - 2 * static_cast<int>(d);
        if (s < 0) {
            break;
        }
        for (const auto& f : enumerate_faces(n, d)) {
            for (const auto& m : basis_P(f, s).monomials) {
                out.push_back({f, Polynomial(m), out.size()});
            }
        }
    }
    return out;
}

/// Tensor-product Lagrange DOFs: vertex values plus moments against Q_{r-2}(f)
/// on each face of positive dimension.
inline std::vector<DofFunctional> dofs_Q(std::size_t n, int r)
{
    if (r < 1) {
        throw std::invalid_argument("Q_r DOFs require r >= 1");
    }
    std::vector<DofFunctional> out;
    for (std::size_t d = 0; d <= n; ++d) {
        for (const auto& f : enumerate_faces(n, d)) {
            const auto weights =
                d == 0 ? std::vector<Monomial>{Monomial(n)} : detail::tensor_monomials_on_face(f, r - 2);
            for (const auto& m : weights) {
                out.push_back({f, Polynomial(m), out.size()});
            }
        }
    }
    return out;
}

/// M(i,j) = apply_dof(dofs[i], basis[j]).
inline RationalMatrix dof_matrix(const SpaceBasis& basis, const std::vector<DofFunctional>& dofs)
{
    if (dofs.size() != basis.size()) {
        throw std::invalid_argument("DOF count " + std::to_string(dofs.size()) + " differs from basis size " +
                                    std::to_string(basis.size()));
    }
    RationalMatrix m(dofs.size(), basis.size());
    for (std::size_t i = 0; i < dofs.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            m(i, j) = apply_dof(dofs[i], Polynomial(basis.monomials[j]));
        }
    }
    return m;
}

struct UnisolvenceReport {
    std::size_t n = 0;
    int r = 0;
    std::size_t dim = 0;
    std::size_t dof_count = 0;
    std::size_t rank = 0;
    bool unisolvent = false;
    // Every kernel element of the DOF matrix has zero trace on all facets.
    bool kernel_traces_vanish = true;
    // Unisolvence one dimension down together with the bubble-factor step.
    bool inductive = false;
};

namespace detail {

inline bool inductive_unisolvence(std::size_t n, int r)
{
    if (!bubble_factor_nullspace_check(n, r).ok()) {
        return false;
    }
    if (n == 1) {
        // Facets are the two vertices, where the evaluation DOFs act directly.
        return true;
    }
    const auto S = basis_S(n - 1, r);
    return dof_matrix(S, dofs_S(n - 1, r)).rank() == S.size() && inductive_unisolvence(n - 1, r);
}

} // namespace detail

/// Exact rank of the serendipity DOF matrix, plus an independent pass through
/// the inductive structure: lower-dimensional unisolvence on facets and the
/// bubble-factor characterization of facet-vanishing functions.
inline UnisolvenceReport check_unisolvence(std::size_t n, int r, bool run_inductive = true)
{
    UnisolvenceReport rep;
    rep.n = n;
    rep.r = r;
    const auto S = basis_S(n, r);
    const auto dofs = dofs_S(n, r);
    rep.dim = S.size();
    rep.dof_count = dofs.size();
    if (rep.dim != rep.dof_count) {
        return rep;
    }
    const auto m = dof_matrix(S, dofs);
    rep.rank = m.rank();
    rep.unisolvent = rep.rank == rep.dim;
    if (!rep.unisolvent) {
        for (const auto& v : m.nullspace()) {
            Polynomial u(n);
            for (std::size_t k = 0; k < v.size(); ++k) {
                u.add_term(S.monomials[k], v[k]);
            }
            for (const auto& facet : enumerate_faces(n, n - 1)) {
                if (!restrict_to_face(u, facet).is_zero()) {
                    rep.kernel_traces_vanish = false;
                }
            }
        }
    }
    rep.inductive = run_inductive ? detail::inductive_unisolvence(n, r) : rep.unisolvent;
    return rep;
}

/// A finite element with its monomial basis, its DOFs and the dual (nodal)
/// basis: apply_dof(dofs[i], shape_functions[j]) = δ_ij.
struct NodalElement {
    SpaceBasis basis;
    std::vector<DofFunctional> dofs;
    std::vector<Polynomial> shape_functions;

    /// Σ_j values[j]·φ_j.
    [[nodiscard]] Polynomial combine(const std::vector<Rational>& values) const
    {
        if (values.size() != shape_functions.size()) {
            throw std::invalid_argument("wrong number of DOF values");
        }
        Polynomial u(basis.n);
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[j] != 0) {
                u += shape_functions[j] * values[j];
            }
        }
        return u;
    }

    /// Interpolant Σ_j L_j(p)·φ_j.
    [[nodiscard]] Polynomial interpolate(const Polynomial& p) const
    {
        std::vector<Rational> values;
        values.reserve(dofs.size());
        for (const auto& L : dofs) {
            values.push_back(apply_dof(L, p));
        }
        return combine(values);
    }
};

/// Solves M·C = I; column j of C holds the monomial coefficients of φ_j.
/// Throws std::domain_error when the DOFs are not unisolvent.
inline NodalElement make_nodal_element(SpaceBasis basis, std::vector<DofFunctional> dofs)
{
    const auto m = dof_matrix(basis, dofs);
    const auto c = m.inverse();
    NodalElement e{std::move(basis), std::move(dofs), {}};
    e.shape_functions.reserve(e.basis.size());
    for (std::size_t j = 0; j < e.basis.size(); ++j) {
        Polynomial phi(e.basis.n);
        for (std::size_t k = 0; k < e.basis.size(); ++k) {
            phi.add_term(e.basis.monomials[k], c(k, j));
        }
        e.shape_functions.push_back(std::move(phi));
    }
    return e;
}

inline NodalElement serendipity_element(std::size_t n, int r) { return make_nodal_element(basis_S(n, r), dofs_S(n, r)); }

inline NodalElement tensor_element(std::size_t n, int r) { return make_nodal_element(basis_Q(n, r), dofs_Q(n, r)); }

inline std::vector<Polynomial> nodal_basis(std::size_t n, int r) { return serendipity_element(n, r).shape_functions; }

/// One row of the per-dimension DOF layout.
struct DofLayoutRow {
    std::size_t d = 0;
    std::size_t faces = 0;
    std::size_t dofs_per_face = 0;
    std::size_t subtotal = 0;
};

struct DofLayout {
    std::size_t n = 0;
    int r = 0;
    std::vector<DofLayoutRow> rows;
    std::size_t total = 0;
};

/// Face counts and per-face DOF counts by dimension, tallied from dofs_S.
inline DofLayout dof_layout(std::size_t n, int r)
{
    DofLayout layout{n, r, {}, 0};
    const auto dofs = dofs_S(n, r);
    for (std::size_t d = 0; d <= n; ++d) {
        DofLayoutRow row;
        row.d = d;
        row.faces = enumerate_faces(n, d).size();
        for (const auto& L : dofs) {
            if (L.face.dimension() == d) {
                ++row.subtotal;
            }
        }
        row.dofs_per_face = row.subtotal / row.faces;
        layout.total += row.subtotal;
        layout.rows.push_back(row);
    }
    return layout;
}

} // namespace serendipity

#endif // SERENDIPITY_DOFS_HPP
