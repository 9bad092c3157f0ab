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

#ifndef SERENDIPITY_MONOMIAL_HPP
#define SERENDIPITY_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace serendipity {

/// Exponent tuple (α_1, …, α_n) of a monomial x_1^α_1 ⋯ x_n^α_n.
///
/// A variable enters linearly when α_i = 1 and superlinearly when α_i ≥ 2.
/// For every monomial, degree() == superlinear_degree() + linear_count().
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::size_t dimension) : exponents_(dimension, 0) {}

    explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

    Monomial(std::initializer_list<unsigned> exponents) : exponents_(exponents) {}

    [[nodiscard]] std::size_t dimension() const noexcept { return exponents_.size(); }

    [[nodiscard]] const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

    [[nodiscard]] unsigned operator[](std::size_t i) const { return exponents_[i]; }

    [[nodiscard]] unsigned degree() const noexcept
    {
        return std::accumulate(exponents_.begin(), exponents_.end(), 0U);
    }

    [[nodiscard]] unsigned superlinear_degree() const noexcept
    {
        unsigned total = 0;
        for (unsigned a : exponents_) {
            if (a >= 2) {
                total += a;
            }
        }
        return total;
    }

    [[nodiscard]] unsigned linear_count() const noexcept
    {
        return static_cast<unsigned>(std::count(exponents_.begin(), exponents_.end(), 1U));
    }

    [[nodiscard]] bool is_constant() const noexcept
    {
        return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned a) { return a == 0; });
    }

    /// Largest single exponent (0 for the constant monomial).
    [[nodiscard]] unsigned max_exponent() const noexcept
    {
        return exponents_.empty() ? 0 : *std::max_element(exponents_.begin(), exponents_.end());
    }

    Monomial& operator*=(const Monomial& other)
    {
        if (other.dimension() != dimension()) {
            throw std::invalid_argument("monomial dimension mismatch");
        }
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            exponents_[i] += other.exponents_[i];
        }
        return *this;
    }

    friend Monomial operator*(Monomial lhs, const Monomial& rhs)
    {
        lhs *= rhs;
        return lhs;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Human-readable form such as "x1^2*x3"; "1" for the constant.
    [[nodiscard]] std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            if (exponents_[i] == 0) {
                continue;
            }
            if (!out.empty()) {
                out += "*";
            }
            out += "x" + std::to_string(i + 1);
            if (exponents_[i] > 1) {
                out += "^" + std::to_string(exponents_[i]);
            }
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<unsigned> exponents_;
};

/// Graded lexicographic order: total degree ascending, then the exponent
/// vectors compared lexicographically with larger leading exponents first
/// (so 1 < x1 < x2 < x1^2 < x1*x2 < x2^2).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept
    {
        const unsigned da = a.degree();
        const unsigned db = b.degree();
        if (da != db) {
            return da < db;
        }
        return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                            a.exponents().begin(), a.exponents().end());
    }
};

/// All monomials in `dimension` variables of total degree exactly `degree`,
/// restricted to the variables listed in `variables` (others get exponent 0).
/// Output is in graded-lex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t dimension,
                                                 const std::vector<std::size_t>& variables,
                                                 unsigned degree)
{
    std::vector<Monomial> out;
    if (variables.empty()) {
        if (degree == 0) {
            out.emplace_back(dimension);
        }
        return out;
    }
    // Enumerate compositions of `degree` into |variables| parts, leading part
    // largest first, which is exactly descending lex order.
    std::vector<unsigned> parts(variables.size(), 0);
    auto recurse = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == variables.size()) {
            parts[pos] = remaining;
            std::vector<unsigned> e(dimension, 0);
            for (std::size_t k = 0; k < variables.size(); ++k) {
                e[variables[k]] = parts[k];
            }
            out.emplace_back(std::move(e));
            return;
        }
        for (unsigned a = remaining + 1; a-- > 0;) {
            parts[pos] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    recurse(recurse, 0, degree);
    return out;
}

/// All monomials of total degree ≤ max_degree in the listed variables, graded-lex.
/// Empty when max_degree < 0.
inline std::vector<Monomial> monomials_up_to_degree(std::size_t dimension,
                                                    const std::vector<std::size_t>& variables,
                                                    int max_degree)
{
    std::vector<Monomial> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto layer = monomials_of_degree(dimension, variables, static_cast<unsigned>(d));
        if (layer.empty()) {
            break;
        }
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace serendipity

#endif // SERENDIPITY_MONOMIAL_HPP
