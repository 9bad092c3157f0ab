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

#ifndef SERENDIPITY_SPACES_HPP
#define SERENDIPITY_SPACES_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace serendipity {

enum class Family { P, Q, S };

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::P:
        return "P";
    case Family::Q:
        return "Q";
    case Family::S:
        return "S";
    }
    return "?";
}

/// A monomial basis for one of the families P_s(f), Q_r(I^n) or S_r(I^n).
/// Monomials are distinct and sorted by GradedLexLess.
struct SpaceBasis {
    Family family = Family::P;
    std::size_t n = 0;
    int degree = 0;
    Face face;
    std::vector<Monomial> monomials;

    [[nodiscard]] std::size_t size() const noexcept { return monomials.size(); }
};

/// P_s(f): monomials of total degree ≤ s in the free variables of f.
/// Empty for s < 0; the constant alone when f is a vertex.
inline SpaceBasis basis_P(const Face& f, int s)
{
    return {Family::P, f.ambient_dimension(), s, f,
            monomials_up_to_degree(f.ambient_dimension(), f.free_indices(), s)};
}

inline SpaceBasis basis_P(std::size_t n, int s) { return basis_P(Face(n), s); }

/// Q_r(I^n): every exponent ≤ r; (r+1)^n monomials.
inline SpaceBasis basis_Q(std::size_t n, int r)
{
    if (n == 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    if (r < 0) {
        throw std::invalid_argument("Q_r requires r >= 0");
    }
    SpaceBasis out{Family::Q, n, r, Face(n), {}};
    std::vector<unsigned> e(n, 0);
    const auto top = static_cast<unsigned>(r);
    while (true) {
        out.monomials.emplace_back(e);
        std::size_t i = 0;
        while (i < n && e[i] == top) {
            e[i] = 0;
            ++i;
        }
        if (i == n) {
            break;
        }
        ++e[i];
    }
    std::sort(out.monomials.begin(), out.monomials.end(), GradedLexLess{});
    return out;
}

/// S_r(I^n): monomials of superlinear degree ≤ r.
///
/// Built constructively: choose d, a set J of d superlinear variables, a
/// monomial q of degree ≤ r-2d in those variables (the exponent on j ∈ J is
/// 2 + q_j), and an exponent 0 or 1 on each remaining variable. Every
/// monomial arises exactly once.
inline SpaceBasis basis_S(std::size_t n, int r)
{
    if (n == 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    if (r < 1) {
        throw std::invalid_argument("S_r requires r >= 1");
    }
    SpaceBasis out{Family::S, n, r, Face(n), {}};
    const std::size_t d_max = std::min<std::size_t>(n, static_cast<std::size_t>(r / 2));
    for (std::size_t d = 0; d <= d_max; ++d) {
        for (const auto& superlinear : detail::subsets(n, d)) {
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < n; ++i) {
                if (!std::binary_search(superlinear.begin(), superlinear.end(), i)) {
                    rest.push_back(i);
                }
            }
            const auto inner = monomials_up_to_degree(n, superlinear, r - 2 * static_cast<int>(d));
            for (const auto& q : inner) {
                for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
                    std::vector<unsigned> e = q.exponents();
                    for (std::size_t j : superlinear) {
                        e[j] += 2;
                    }
                    for (std::size_t k = 0; k < rest.size(); ++k) {
                        e[rest[k]] = (mask >> k) & 1U;
                    }
                    out.monomials.emplace_back(std::move(e));
                }
            }
        }
    }
    std::sort(out.monomials.begin(), out.monomials.end(), GradedLexLess{});
    return out;
}

/// Membership in S_r as "linear in at least deg(m) - r variables".
inline bool in_S_by_linear_count(const Monomial& m, int r)
{
    return static_cast<int>(m.linear_count()) >= static_cast<int>(m.degree()) - r;
}

/// Membership in S_r as "superlinear degree at most r".
inline bool in_S_by_superlinear_degree(const Monomial& m, int r)
{
    return static_cast<int>(m.superlinear_degree()) <= r;
}

/// Σ_{d=0}^{min(n,⌊r/2⌋)} 2^{n-d}·C(n,d)·C(r-d,d).
inline std::size_t dim_S_formula(std::size_t n, int r)
{
    if (r < 1) {
        throw std::invalid_argument("S_r requires r >= 1");
    }
    std::size_t total = 0;
    const std::size_t d_max = std::min<std::size_t>(n, static_cast<std::size_t>(r / 2));
    for (std::size_t d = 0; d <= d_max; ++d) {
        total += ipow(2, static_cast<unsigned>(n - d)) * binomial(static_cast<long>(n), static_cast<long>(d)) *
                 binomial(r - static_cast<long>(d), static_cast<long>(d));
    }
    return total;
}

inline std::size_t dim_Q(std::size_t n, int r) { return ipow(static_cast<std::size_t>(r + 1), static_cast<unsigned>(n)); }

/// dim P_s in d variables = C(s+d, d); 0 for s < 0.
inline std::size_t dim_P(std::size_t d, int s)
{
    return s < 0 ? 0 : binomial(s + static_cast<long>(d), static_cast<long>(d));
}

/// Σ_d 2^{n-d}·C(n,d)·(r-1)^d, the Q_r DOF count.
inline std::size_t q_dof_count_formula(std::size_t n, int r)
{
    std::size_t total = 0;
    for (std::size_t d = 0; d <= n; ++d) {
        total += ipow(2, static_cast<unsigned>(n - d)) * binomial(static_cast<long>(n), static_cast<long>(d)) *
                 ipow(static_cast<std::size_t>(r - 1), static_cast<unsigned>(d));
    }
    return total;
}

struct InclusionReport {
    std::size_t n = 0;
    int r = 0;
    std::size_t dim_P_r = 0;
    std::size_t dim_S_r = 0;
    std::size_t dim_P_upper = 0; // dim P_{r+n-1}
    bool P_in_S = false;
    bool S_in_P_upper = false;
    int max_degree_in_S = 0;     // attains r+n-1
    bool one_dimensional_equal = true; // S_r = P_r = Q_r, checked only when n == 1

    [[nodiscard]] bool ok() const noexcept
    {
        return P_in_S && S_in_P_upper && max_degree_in_S == r + static_cast<int>(n) - 1 &&
               one_dimensional_equal;
    }
};

inline bool is_subset(const std::vector<Monomial>& a, const std::vector<Monomial>& b)
{
    std::set<Monomial, GradedLexLess> bs(b.begin(), b.end());
    return std::all_of(a.begin(), a.end(), [&](const Monomial& m) { return bs.count(m) != 0; });
}

/// Checks P_r ⊆ S_r ⊆ P_{r+n-1} by monomial containment, and S = P = Q when n = 1.
inline InclusionReport check_inclusions(std::size_t n, int r)
{
    const auto P = basis_P(n, r);
    const auto S = basis_S(n, r);
    const auto upper = basis_P(n, r + static_cast<int>(n) - 1);
    InclusionReport rep;
    rep.n = n;
    rep.r = r;
    rep.dim_P_r = P.size();
    rep.dim_S_r = S.size();
    rep.dim_P_upper = upper.size();
    rep.P_in_S = is_subset(P.monomials, S.monomials);
    rep.S_in_P_upper = is_subset(S.monomials, upper.monomials);
    for (const auto& m : S.monomials) {
        rep.max_degree_in_S = std::max(rep.max_degree_in_S, static_cast<int>(m.degree()));
    }
    if (n == 1) {
        const auto Q = basis_Q(1, r);
        rep.one_dimensional_equal = S.monomials == P.monomials && S.monomials == Q.monomials;
    }
    return rep;
}

} // namespace serendipity

#endif // SERENDIPITY_SPACES_HPP
