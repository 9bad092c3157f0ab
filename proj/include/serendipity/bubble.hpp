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

#ifndef SERENDIPITY_BUBBLE_HPP
#define SERENDIPITY_BUBBLE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "cube.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "spaces.hpp"

namespace serendipity {

/// b_f = Π_{j free}(1 - x_j²) · Π_{j fixed}(1 + c_j x_j).
struct BubbleFunction {
    Face face;
    Polynomial poly;
};

inline BubbleFunction bubble(const Face& f)
{
    const std::size_t n = f.ambient_dimension();
    Polynomial b(n, Rational(1));
    for (std::size_t j = 0; j < n; ++j) {
        if (f.sign(j) == 0) {
            Polynomial factor(n, Rational(1));
            std::vector<unsigned> e(n, 0);
            e[j] = 2;
            factor.add_term(Monomial(std::move(e)), Rational(-1));
            b *= factor;
        } else {
            b *= affine(n, j, Rational(1), Rational(f.sign(j)));
        }
    }
    return {f, std::move(b)};
}

/// Result of checking the key step of the unisolvence argument: the part of
/// S_r that vanishes on every facet is exactly B·P_{r-2n}, with
/// B = Π(1 - x_j²), and the interior moments separate it.
struct BubbleFactorReport {
    std::size_t n = 0;
    int r = 0;
    std::size_t facet_vanishing_dim = 0;  // computed kernel of all facet traces on S_r
    std::size_t expected_dim = 0;         // dim P_{r-2n}
    bool bubble_multiples_in_S = true;    // deg₂(B·m) ≤ r
    bool bubble_multiples_vanish = true;  // B·m has zero trace on every facet
    bool bubble_multiples_independent = true;
    RationalMatrix moment_gram;           // ∫ B·m_a·m_b
    RationalMatrix l2_gram;               // ∫ (B·m_a)(B·m_b)
    bool moment_gram_positive_definite = true;
    bool l2_gram_positive_definite = true;

    [[nodiscard]] bool ok() const noexcept
    {
        return facet_vanishing_dim == expected_dim && bubble_multiples_in_S && bubble_multiples_vanish &&
               bubble_multiples_independent && moment_gram_positive_definite && l2_gram_positive_definite;
    }
};

/// Coordinates of p in a monomial basis; throws if p has a term outside it.
inline std::vector<Rational> coordinates_in(const Polynomial& p, const std::vector<Monomial>& basis)
{
    std::map<Monomial, std::size_t, GradedLexLess> index;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        index.emplace(basis[k], k);
    }
    std::vector<Rational> out(basis.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) {
            throw std::domain_error("polynomial has a term " + m.to_string() + " outside the basis");
        }
        out[it->second] = c;
    }
    return out;
}

/// Linear map u ↦ (traces of u on all 2n facets) on S_r, in monomial coordinates.
inline RationalMatrix facet_trace_matrix(const SpaceBasis& space)
{
    const std::size_t n = space.n;
    std::vector<std::vector<Rational>> rows;
    for (const auto& facet : enumerate_faces(n, n - 1)) {
        std::map<Monomial, std::size_t, GradedLexLess> row_of;
        for (std::size_t k = 0; k < space.size(); ++k) {
            const Polynomial trace = restrict_to_face(Polynomial(space.monomials[k]), facet);
            for (const auto& [m, c] : trace.terms()) {
                auto [it, inserted] = row_of.try_emplace(m, rows.size());
                if (inserted) {
                    rows.emplace_back(space.size());
                }
                rows[it->second][k] += c;
            }
        }
    }
    RationalMatrix out(rows.size(), space.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < space.size(); ++j) {
            out(i, j) = rows[i][j];
        }
    }
    return out;
}

inline BubbleFactorReport bubble_factor_nullspace_check(std::size_t n, int r)
{
    BubbleFactorReport rep;
    rep.n = n;
    rep.r = r;
    const SpaceBasis S = basis_S(n, r);
    rep.facet_vanishing_dim = facet_trace_matrix(S).nullspace().size();

    const Face cube(n);
    const Polynomial B = bubble(cube).poly;
    const SpaceBasis inner = basis_P(n, r - 2 * static_cast<int>(n));
    rep.expected_dim = inner.size();

    std::vector<Polynomial> multiples;
    for (const auto& m : inner.monomials) {
        multiples.push_back(B * Polynomial(m));
    }
    RationalMatrix coords(multiples.size(), S.size());
    for (std::size_t a = 0; a < multiples.size(); ++a) {
        const auto& q = multiples[a];
        if (q.superlinear_degree() > r) {
            rep.bubble_multiples_in_S = false;
            continue;
        }
        for (const auto& facet : enumerate_faces(n, n - 1)) {
            if (!restrict_to_face(q, facet).is_zero()) {
                rep.bubble_multiples_vanish = false;
            }
        }
        const auto c = coordinates_in(q, S.monomials);
        for (std::size_t k = 0; k < c.size(); ++k) {
            coords(a, k) = c[k];
        }
    }
    rep.bubble_multiples_independent = coords.rank() == multiples.size();

    rep.moment_gram = RationalMatrix(inner.size(), inner.size());
    rep.l2_gram = RationalMatrix(inner.size(), inner.size());
    for (std::size_t a = 0; a < inner.size(); ++a) {
        for (std::size_t b = 0; b < inner.size(); ++b) {
            const Polynomial mb(inner.monomials[b]);
            rep.moment_gram(a, b) = integrate_face(multiples[a] * mb, cube);
            rep.l2_gram(a, b) = integrate_face(multiples[a] * multiples[b], cube);
        }
    }
    rep.moment_gram_positive_definite = rep.moment_gram.is_positive_definite();
    rep.l2_gram_positive_definite = rep.l2_gram.is_positive_definite();
    return rep;
}

} // namespace serendipity

#endif // SERENDIPITY_BUBBLE_HPP
