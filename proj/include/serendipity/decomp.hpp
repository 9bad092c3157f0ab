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

#ifndef SERENDIPITY_DECOMP_HPP
#define SERENDIPITY_DECOMP_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bubble.hpp"
#include "cube.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "spaces.hpp"

namespace serendipity {

/// An element of V_f = P^f_{r-2d}·b_f: `coefficient` is a polynomial in the
/// free variables of `face` and `component` = coefficient·b_f.
struct FaceComponent {
    Face face;
    Polynomial coefficient;
    Polynomial component;

    friend bool operator==(const FaceComponent&, const FaceComponent&) = default;
};

/// Monomial basis of V_f: one component m·b_f per m ∈ P_{r-2d} in the free
/// variables of f. dim V_f = C(r-d, d); empty when r < 2d.
inline std::vector<FaceComponent> space_V(const Face& f, int r)
{
    if (r < 1) {
        throw std::invalid_argument("S_r requires r >= 1");
    }
    const int s = r - 2 * static_cast<int>(f.dimension());
    std::vector<FaceComponent> out;
    if (s < 0) {
        return out;
    }
    const Polynomial b = bubble(f).poly;
    for (const auto& m : basis_P(f, s).monomials) {
        Polynomial coeff(m);
        out.push_back({f, coeff, coeff * b});
    }
    return out;
}

struct DirectSumReport {
    std::size_t n = 0;
    int r = 0;
    std::size_t sum_of_dims = 0;
    std::size_t dim_S = 0;
    std::size_t rank = 0;
    bool members_in_S = true;
    bool dims_match = false;
    bool full_rank = false;

    [[nodiscard]] bool ok() const noexcept { return dims_match && full_rank && members_in_S; }
};

/// Sum of polynomial components; the zero polynomial for an empty map.
inline Polynomial reconstruct(std::size_t n, const std::map<Face, FaceComponent>& parts)
{
    Polynomial out(n);
    for (const auto& [f, part] : parts) {
        out += part.component;
    }
    return out;
}

/// Decomposition of S_r(I^n) into the face spaces V_f, with the coordinate
/// matrix of all V_f basis components against the S_r monomial basis.
class GeometricDecomposition {
public:
    GeometricDecomposition(std::size_t n, int r) : n_(n), r_(r), space_(basis_S(n, r))
    {
        for (const auto& f : enumerate_all_faces(n)) {
            for (auto& c : space_V(f, r)) {
                components_.push_back(std::move(c));
            }
        }
        coords_ = RationalMatrix(space_.size(), components_.size());
        for (std::size_t k = 0; k < components_.size(); ++k) {
            if (components_[k].component.superlinear_degree() > r) {
                members_in_S_ = false;
                continue;
            }
            const auto c = coordinates_in(components_[k].component, space_.monomials);
            for (std::size_t i = 0; i < c.size(); ++i) {
                coords_(i, k) = c[i];
            }
        }
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] int r() const noexcept { return r_; }
    [[nodiscard]] const SpaceBasis& space() const noexcept { return space_; }
    [[nodiscard]] const std::vector<FaceComponent>& components() const noexcept { return components_; }
    [[nodiscard]] const RationalMatrix& coordinate_matrix() const noexcept { return coords_; }

    [[nodiscard]] DirectSumReport verify() const
    {
        DirectSumReport rep;
        rep.n = n_;
        rep.r = r_;
        rep.sum_of_dims = components_.size();
        rep.dim_S = dim_S_formula(n_, r_);
        rep.members_in_S = members_in_S_;
        rep.dims_match = rep.sum_of_dims == rep.dim_S && space_.size() == rep.dim_S;
        rep.rank = coords_.rank();
        rep.full_rank = rep.dims_match && rep.rank == rep.dim_S;
        return rep;
    }

    /// The unique p = Σ_f (component on f), by one exact linear solve in the
    /// concatenated V_f coordinates. Faces with a zero component are omitted.
    /// Throws std::domain_error when deg₂ p > r.
    [[nodiscard]] std::map<Face, FaceComponent> decompose(const Polynomial& p) const
    {
        return decompose_many({p}).front();
    }

    [[nodiscard]] std::vector<std::map<Face, FaceComponent>> decompose_many(const std::vector<Polynomial>& ps) const
    {
        RationalMatrix rhs(space_.size(), ps.size());
        for (std::size_t col = 0; col < ps.size(); ++col) {
            const auto& p = ps[col];
            if (p.dimension() != n_) {
                throw std::invalid_argument("polynomial dimension does not match the decomposition");
            }
            if (p.superlinear_degree() > r_) {
                throw std::domain_error("polynomial has superlinear degree " + std::to_string(p.superlinear_degree()) +
                                        " > r = " + std::to_string(r_) + "; it is not in S_r");
            }
            const auto c = coordinates_in(p, space_.monomials);
            for (std::size_t i = 0; i < c.size(); ++i) {
                rhs(i, col) = c[i];
            }
        }
        const RationalMatrix sol = coords_.solve(rhs);
        std::vector<std::map<Face, FaceComponent>> out(ps.size());
        for (std::size_t col = 0; col < ps.size(); ++col) {
            std::map<Face, Polynomial> coefficient;
            for (std::size_t k = 0; k < components_.size(); ++k) {
                if (sol(k, col) == 0) {
                    continue;
                }
                auto [it, inserted] = coefficient.try_emplace(components_[k].face, n_);
                it->second += components_[k].coefficient * sol(k, col);
            }
            for (auto& [f, q] : coefficient) {
                if (q.is_zero()) {
                    continue;
                }
                Polynomial comp = q * bubble(f).poly;
                out[col].emplace(f, FaceComponent{f, std::move(q), std::move(comp)});
            }
        }
        return out;
    }

private:
    std::size_t n_;
    int r_;
    SpaceBasis space_;
    std::vector<FaceComponent> components_;
    RationalMatrix coords_;
    bool members_in_S_ = true;
};

inline DirectSumReport verify_direct_sum(std::size_t n, int r) { return GeometricDecomposition(n, r).verify(); }

inline std::map<Face, FaceComponent> decompose(const Polynomial& p, std::size_t n, int r)
{
    return GeometricDecomposition(n, r).decompose(p);
}

namespace detail {

// Dense univariate coefficients, index = power.
using Univariate = std::vector<Rational>;

// (x^a - ½(1+x) - ((-1)^a/2)(1-x)) / (1 - x²) for a ≥ 2; the result has degree a-2.
inline Univariate superlinear_remainder(unsigned a)
{
    Univariate num(a + 1);
    num[a] = 1;
    const Rational half(1, 2);
    const Rational alt = (a % 2 == 0) ? half : Rational(-half);
    num[0] -= half + alt;
    num[1] -= half - alt;
    // Long division by (x² - 1), then negate for (1 - x²).
    Univariate quotient(a - 1);
    for (unsigned k = a; k >= 2; --k) {
        const Rational lead = num[k];
        quotient[k - 2] = lead;
        num[k] = 0;
        num[k - 2] += lead;
    }
    if (num[0] != 0 || num[1] != 0) {
        throw std::logic_error("remainder division by 1 - x^2 is not exact");
    }
    for (auto& c : quotient) {
        c = -c;
    }
    return quotient;
}

} // namespace detail

/// Constructive expansion of x^α into face components.
///
/// Each x_j^{α_j} is split as
///   α_j = 0:  ½(1+x_j) + ½(1-x_j)
///   α_j = 1:  ½(1+x_j) - ½(1-x_j)
///   α_j ≥ 2:  ½(1+x_j) + ((-1)^{α_j}/2)(1-x_j) + (1-x_j²)·r_j(x_j)
/// and the product is distributed. A term picks, per variable, either a
/// factor (1 ± x_j), which fixes x_j = ±1, or the bubble factor, which leaves
/// x_j free; it therefore lies in V_f for the face f so determined, with
/// coefficient polynomial Π r_j(x_j) over the free variables.
inline std::vector<FaceComponent> expand_monomial(const Monomial& alpha, int r)
{
    if (static_cast<int>(alpha.superlinear_degree()) > r) {
        throw std::domain_error("monomial " + alpha.to_string() + " has superlinear degree > r");
    }
    const std::size_t n = alpha.dimension();
    struct Choice {
        int sign;        // +1, -1, or 0 for the bubble factor
        Rational scale;
        detail::Univariate remainder; // used when sign == 0
    };
    std::vector<std::vector<Choice>> choices(n);
    const Rational half(1, 2);
    for (std::size_t j = 0; j < n; ++j) {
        const unsigned a = alpha[j];
        if (a == 0) {
            choices[j] = {{1, half, {}}, {-1, half, {}}};
        } else if (a == 1) {
            choices[j] = {{1, half, {}}, {-1, -half, {}}};
        } else {
            choices[j] = {{1, half, {}},
                          {-1, a % 2 == 0 ? half : Rational(-half), {}},
                          {0, Rational(1), detail::superlinear_remainder(a)}};
        }
    }

    std::map<Face, Polynomial> by_face;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<std::int8_t> coords(n, 0);
        Polynomial coeff(n, Rational(1));
        for (std::size_t j = 0; j < n; ++j) {
            const Choice& c = choices[j][pick[j]];
            coords[j] = static_cast<std::int8_t>(c.sign);
            coeff *= c.scale;
            if (c.sign == 0) {
                Polynomial rj(n);
                for (unsigned k = 0; k < c.remainder.size(); ++k) {
                    std::vector<unsigned> e(n, 0);
                    e[j] = k;
                    rj.add_term(Monomial(std::move(e)), c.remainder[k]);
                }
                coeff *= rj;
            }
        }
        auto [it, inserted] = by_face.try_emplace(Face(std::move(coords)), n);
        it->second += coeff;

        std::size_t j = 0;
        while (j < n && ++pick[j] == choices[j].size()) {
            pick[j] = 0;
            ++j;
        }
        if (j == n) {
            break;
        }
    }

    std::vector<FaceComponent> out;
    for (auto& [f, q] : by_face) {
        if (q.is_zero()) {
            continue;
        }
        Polynomial comp = q * bubble(f).poly;
        out.push_back({f, std::move(q), std::move(comp)});
    }
    return out;
}

/// expand_monomial applied termwise to p and merged by face.
inline std::map<Face, FaceComponent> expand_polynomial(const Polynomial& p, int r)
{
    std::map<Face, Polynomial> by_face;
    for (const auto& [m, c] : p.terms()) {
        for (auto& part : expand_monomial(m, r)) {
            auto [it, inserted] = by_face.try_emplace(part.face, p.dimension());
            it->second += part.coefficient * c;
        }
    }
    std::map<Face, FaceComponent> out;
    for (auto& [f, q] : by_face) {
        if (q.is_zero()) {
            continue;
        }
        Polynomial comp = q * bubble(f).poly;
        out.emplace(f, FaceComponent{f, std::move(q), std::move(comp)});
    }
    return out;
}

} // namespace serendipity

#endif // SERENDIPITY_DECOMP_HPP
