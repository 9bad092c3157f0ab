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

#ifndef SERENDIPITY_TEST_UTIL_HPP
#define SERENDIPITY_TEST_UTIL_HPP

#include <cstddef>
#include <random>
#include <vector>

#include <serendipity/serendipity.hpp>

namespace serendipity::testing {

/// Random sparse polynomial with small integer coefficients over `terms`
/// random monomials of per-variable exponent ≤ max_exp.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, std::size_t terms, unsigned max_exp)
{
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    std::uniform_int_distribution<int> c(-9, 9);
    Polynomial p(n);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<unsigned> ex(n);
        for (auto& v : ex) {
            v = e(rng);
        }
        p.add_term(Monomial(ex), Rational(c(rng)));
    }
    return p;
}

inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/// Random element of S_r: small integer combination of the monomial basis.
inline Polynomial random_serendipity(std::mt19937_64& rng, const SpaceBasis& S)
{
    std::uniform_int_distribution<int> c(-9, 9);
    Polynomial p(S.n);
    for (const auto& m : S.monomials) {
        p.add_term(m, Rational(c(rng)));
    }
    return p;
}

/// Determinant by cofactor expansion along the first row. Exponential; for
/// small matrices only. Independent of the elimination code it checks.
inline Rational cofactor_determinant(const std::vector<std::vector<Rational>>& a)
{
    const std::size_t n = a.size();
    if (n == 0) {
        return Rational(1);
    }
    if (n == 1) {
        return a[0][0];
    }
    Rational det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col] == 0) {
            continue;
        }
        std::vector<std::vector<Rational>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) {
                    row.push_back(a[i][j]);
                }
            }
            minor.push_back(std::move(row));
        }
        const Rational term = a[0][col] * cofactor_determinant(minor);
        det += (col % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

inline std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m)
{
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

/// Polynomial from a list of (exponents, coefficient) pairs.
inline Polynomial poly(std::size_t n, std::initializer_list<std::pair<std::vector<unsigned>, Rational>> terms)
{
    Polynomial p(n);
    for (const auto& [e, c] : terms) {
        p.add_term(Monomial(e), c);
    }
    return p;
}

} // namespace serendipity::testing

#endif // SERENDIPITY_TEST_UTIL_HPP
