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

#ifndef SERENDIPITY_CUBE_HPP
#define SERENDIPITY_CUBE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace serendipity {

/// A face of the cube [-1,1]^n, given by the equations x_j = c_j for j in a
/// fixed index set J with c_j ∈ {-1,+1}. The remaining indices are free and
/// the face dimension is n - |J|. J = ∅ is the cube itself; |J| = n a vertex.
///
/// Indices are 0-based in the API and 1-based in serialized form.
class Face {
public:
    Face() = default;

    /// The whole cube I^n.
    explicit Face(std::size_t n) : coords_(n, 0) {}

    /// Per-coordinate description: 0 means free, -1/+1 means fixed to that value.
    explicit Face(std::vector<std::int8_t> coords) : coords_(std::move(coords))
    {
        for (auto c : coords_) {
            if (c != 0 && c != 1 && c != -1) {
                throw std::invalid_argument("face coordinate must be -1, 0 or +1");
            }
        }
    }

    static Face vertex(const std::vector<int>& signs)
    {
        std::vector<std::int8_t> c(signs.begin(), signs.end());
        for (auto s : c) {
            if (s == 0) {
                throw std::invalid_argument("vertex signs must be nonzero");
            }
        }
        return Face(std::move(c));
    }

    /// The facet {x_index = sign}.
    static Face facet(std::size_t n, std::size_t index, int sign)
    {
        if (index >= n || (sign != 1 && sign != -1)) {
            throw std::invalid_argument("invalid facet");
        }
        std::vector<std::int8_t> c(n, 0);
        c[index] = static_cast<std::int8_t>(sign);
        return Face(std::move(c));
    }

    [[nodiscard]] std::size_t ambient_dimension() const noexcept { return coords_.size(); }

    [[nodiscard]] std::size_t dimension() const noexcept
    {
        return static_cast<std::size_t>(std::count(coords_.begin(), coords_.end(), 0));
    }

    [[nodiscard]] const std::vector<std::int8_t>& coords() const noexcept { return coords_; }

    [[nodiscard]] bool is_fixed(std::size_t i) const { return coords_.at(i) != 0; }
    [[nodiscard]] int sign(std::size_t i) const { return coords_.at(i); }

    [[nodiscard]] std::vector<std::size_t> fixed_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] != 0) {
                out.push_back(i);
            }
        }
        return out;
    }

    [[nodiscard]] std::vector<std::size_t> free_indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) {
                out.push_back(i);
            }
        }
        return out;
    }

    /// Signs c_j in the order of fixed_indices().
    [[nodiscard]] std::vector<int> signs() const
    {
        std::vector<int> out;
        for (auto c : coords_) {
            if (c != 0) {
                out.push_back(c);
            }
        }
        return out;
    }

    /// Free coordinates 0, fixed coordinates c_j.
    [[nodiscard]] std::vector<Rational> barycenter() const
    {
        std::vector<Rational> out;
        out.reserve(coords_.size());
        for (auto c : coords_) {
            out.emplace_back(static_cast<long>(c));
        }
        return out;
    }

    /// Text form such as "(x1=+1, x3=-1)"; "I^n" for the whole cube.
    [[nodiscard]] std::string to_string() const
    {
        if (dimension() == coords_.size()) {
            return "I^" + std::to_string(coords_.size());
        }
        std::string out = "(";
        bool first = true;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i] == 0) {
                continue;
            }
            if (!first) {
                out += ", ";
            }
            first = false;
            out += "x" + std::to_string(i + 1) + (coords_[i] > 0 ? "=+1" : "=-1");
        }
        return out + ")";
    }

    friend bool operator==(const Face&, const Face&) = default;

    /// Canonical face order: dimension ascending, then J lexicographically
    /// (as sorted index lists), then the sign pattern lexicographically with
    /// -1 before +1.
    friend std::strong_ordering operator<=>(const Face& a, const Face& b)
    {
        if (auto c = a.ambient_dimension() <=> b.ambient_dimension(); c != 0) {
            return c;
        }
        if (auto c = a.dimension() <=> b.dimension(); c != 0) {
            return c;
        }
        const auto ja = a.fixed_indices();
        const auto jb = b.fixed_indices();
        if (ja != jb) {
            return std::lexicographical_compare_three_way(ja.begin(), ja.end(), jb.begin(), jb.end());
        }
        const auto sa = a.signs();
        const auto sb = b.signs();
        return std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end());
    }

private:
    std::vector<std::int8_t> coords_;
};

namespace detail {

// Lexicographic enumeration of k-subsets of {0,…,n-1}.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n) {
        return out;
    }
    std::vector<std::size_t> current;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == k) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

} // namespace detail

/// All 2^{n-d}·C(n,d) faces of dimension d, in canonical order.
inline std::vector<Face> enumerate_faces(std::size_t n, std::size_t d)
{
    if (n == 0) {
        throw std::invalid_argument("cube dimension must be positive");
    }
    if (d > n) {
        throw std::invalid_argument("face dimension " + std::to_string(d) + " out of range [0," +
                                    std::to_string(n) + "]");
    }
    std::vector<Face> out;
    const std::size_t fixed_count = n - d;
    for (const auto& fixed : detail::subsets(n, fixed_count)) {
        // Sign patterns in lex order with -1 < +1: bit k of `mask`, read from
        // the most significant end, selects +1 for fixed[k].
        for (std::size_t mask = 0; mask < (std::size_t{1} << fixed_count); ++mask) {
            std::vector<std::int8_t> coords(n, 0);
            for (std::size_t k = 0; k < fixed_count; ++k) {
                const bool plus = (mask >> (fixed_count - 1 - k)) & 1U;
                coords[fixed[k]] = plus ? 1 : -1;
            }
            out.emplace_back(std::move(coords));
        }
    }
    return out;
}

/// All faces of all dimensions, dimension ascending.
inline std::vector<Face> enumerate_all_faces(std::size_t n)
{
    std::vector<Face> out;
    for (std::size_t d = 0; d <= n; ++d) {
        auto layer = enumerate_faces(n, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// True iff g ⊆ f, i.e. every constraint of f is also a constraint of g with
/// the same sign.
inline bool face_contains(const Face& f, const Face& g)
{
    if (f.ambient_dimension() != g.ambient_dimension()) {
        throw std::invalid_argument("faces live in cubes of different dimension");
    }
    for (std::size_t i = 0; i < f.ambient_dimension(); ++i) {
        if (f.sign(i) != 0 && f.sign(i) != g.sign(i)) {
            return false;
        }
    }
    return true;
}

/// Trace of p on f: substitutes x_j := c_j for each fixed index. The result
/// keeps the ambient dimension with zero exponents on the fixed indices.
inline Polynomial restrict_to_face(const Polynomial& p, const Face& f)
{
    if (p.dimension() != f.ambient_dimension()) {
        throw std::invalid_argument("polynomial and face dimension mismatch");
    }
    Polynomial out(p.dimension());
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e = m.exponents();
        bool negative = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (f.sign(i) != 0) {
                if (f.sign(i) < 0 && e[i] % 2 == 1) {
                    negative = !negative;
                }
                e[i] = 0;
            }
        }
        out.add_term(Monomial(std::move(e)), negative ? Rational(-c) : c);
    }
    return out;
}

/// ∫_f m for a single monomial: product of c_j^α_j over fixed indices and of
/// the interval moments over free indices. At a vertex this is evaluation.
inline Rational integrate_monomial_on_face(const Monomial& m, const Face& f)
{
    Rational value = 1;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        if (f.sign(i) == 0) {
            value *= interval_moment(m[i]);
            if (value == 0) {
                return value;
            }
        } else if (f.sign(i) < 0 && m[i] % 2 == 1) {
            value = -value;
        }
    }
    return value;
}

/// ∫_f p, with counting measure on vertices.
inline Rational integrate_face(const Polynomial& p, const Face& f)
{
    if (p.dimension() != f.ambient_dimension()) {
        throw std::invalid_argument("polynomial and face dimension mismatch");
    }
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        total += c * integrate_monomial_on_face(m, f);
    }
    return total;
}

} // namespace serendipity

#endif // SERENDIPITY_CUBE_HPP
