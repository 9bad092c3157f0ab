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

#ifndef SERENDIPITY_POLYNOMIAL_HPP
#define SERENDIPITY_POLYNOMIAL_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"

namespace serendipity {

namespace detail {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DoubleDouble {
    double hi;
    double lo;
};

inline DoubleDouble two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble fast_two_sum(double a, double b)
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble dd_add(DoubleDouble a, DoubleDouble b)
{
    const auto s = two_sum(a.hi, b.hi);
    const auto t = two_sum(a.lo, b.lo);
    auto u = fast_two_sum(s.hi, s.lo + t.hi);
    return fast_two_sum(u.hi, u.lo + t.lo);
}

inline DoubleDouble dd_mul(DoubleDouble a, DoubleDouble b)
{
    const double p = a.hi * b.hi;
    const double e = std::fma(a.hi, b.hi, -p);
    return fast_two_sum(p, e + (a.hi * b.lo + a.lo * b.hi));
}

} // namespace detail

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lex order and never store a zero coefficient,
/// so two polynomials are equal exactly when their term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;

    explicit Polynomial(std::size_t dimension) : dimension_(dimension) {}

    /// Constant polynomial.
    Polynomial(std::size_t dimension, const Rational& c) : dimension_(dimension)
    {
        add_term(Monomial(dimension), c);
    }

    /// Single term c·m.
    explicit Polynomial(const Monomial& m, const Rational& c = Rational(1))
        : dimension_(m.dimension())
    {
        add_term(m, c);
    }

    /// The coordinate function x_i (0-based index).
    static Polynomial variable(std::size_t dimension, std::size_t i)
    {
        if (i >= dimension) {
            throw std::out_of_range("variable index out of range");
        }
        std::vector<unsigned> e(dimension, 0);
        e[i] = 1;
        return Polynomial(Monomial(std::move(e)));
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c·m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c)
    {
        if (m.dimension() != dimension_) {
            throw std::invalid_argument("monomial dimension does not match polynomial");
        }
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept
    {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            d = std::max(d, static_cast<int>(m.degree()));
        }
        return d;
    }

    /// Maximum superlinear degree over the terms; -1 for the zero polynomial.
    [[nodiscard]] int superlinear_degree() const noexcept
    {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            d = std::max(d, static_cast<int>(m.superlinear_degree()));
        }
        return d;
    }

    Polynomial& operator+=(const Polynomial& other)
    {
        check_dimension(other);
        for (const auto& [m, c] : other.terms_) {
            add_term(m, c);
        }
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other)
    {
        check_dimension(other);
        for (const auto& [m, c] : other.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs)
    {
        lhs.check_dimension(rhs);
        Polynomial out(lhs.dimension_);
        for (const auto& [ma, ca] : lhs.terms_) {
            for (const auto& [mb, cb] : rhs.terms_) {
                out.add_term(ma * mb, ca * cb);
            }
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
    }

    /// Exact value at a rational point.
    [[nodiscard]] Rational evaluate(std::span<const Rational> point) const
    {
        check_point(point.size());
        // Powers are built once per coordinate up to the largest exponent used.
        std::vector<std::vector<Rational>> powers(dimension_);
        unsigned top = 0;
        for (const auto& [m, c] : terms_) {
            top = std::max(top, m.max_exponent());
        }
        for (std::size_t i = 0; i < dimension_; ++i) {
            powers[i].resize(top + 1);
            powers[i][0] = 1;
            for (unsigned k = 1; k <= top; ++k) {
                powers[i][k] = powers[i][k - 1] * point[i];
            }
        }
        Rational total = 0;
        Rational term;
        for (const auto& [m, c] : terms_) {
            term = c;
            for (std::size_t i = 0; i < dimension_; ++i) {
                if (m[i] != 0) {
                    term *= powers[i][m[i]];
                }
            }
            total += term;
        }
        return total;
    }

    /// Floating-point value at a point, in double-double arithmetic: powers,
    /// coefficients (split into a leading double and its rounding residual)
    /// and products use error-free fma transformations, so the only
    /// significant error left is the conditioning of the polynomial itself.
    [[nodiscard]] double evaluate(std::span<const double> point) const
    {
        check_point(point.size());
        unsigned top = 0;
        for (const auto& [m, c] : terms_) {
            top = std::max(top, m.max_exponent());
        }
        std::vector<std::vector<detail::DoubleDouble>> powers(dimension_,
                                                              std::vector<detail::DoubleDouble>(top + 1, {1.0, 0.0}));
        for (std::size_t i = 0; i < dimension_; ++i) {
            for (unsigned k = 1; k <= top; ++k) {
                powers[i][k] = detail::dd_mul(powers[i][k - 1], {point[i], 0.0});
            }
        }
        detail::DoubleDouble sum{0.0, 0.0};
        for (const auto& [m, c] : terms_) {
            const double hi = c.get_d();
            Rational residual = c - Rational(hi);
            detail::DoubleDouble term{hi, residual.get_d()};
            for (std::size_t i = 0; i < dimension_; ++i) {
                if (m[i] != 0) {
                    term = detail::dd_mul(term, powers[i][m[i]]);
                }
            }
            sum = detail::dd_add(sum, term);
        }
        return sum.hi + sum.lo;
    }

    /// Integrates over [-1,1] in every variable listed in `free_indices`;
    /// those exponents become 0 and the others are kept. The empty index set
    /// is the identity.
    [[nodiscard]] Polynomial integrate_box(const std::vector<std::size_t>& free_indices) const
    {
        for (std::size_t i : free_indices) {
            if (i >= dimension_) {
                throw std::out_of_range("integration index out of range");
            }
        }
        Polynomial out(dimension_);
        for (const auto& [m, c] : terms_) {
            Rational factor = c;
            std::vector<unsigned> e = m.exponents();
            for (std::size_t i : free_indices) {
                factor *= interval_moment(e[i]);
                if (factor == 0) {
                    break;
                }
                e[i] = 0;
            }
            if (factor != 0) {
                out.add_term(Monomial(std::move(e)), factor);
            }
        }
        return out;
    }

    /// Substitutes x_i := value for one variable, keeping the ambient dimension.
    [[nodiscard]] Polynomial substitute(std::size_t i, const Rational& value) const
    {
        if (i >= dimension_) {
            throw std::out_of_range("substitution index out of range");
        }
        Polynomial out(dimension_);
        for (const auto& [m, c] : terms_) {
            std::vector<unsigned> e = m.exponents();
            Rational factor = c;
            for (unsigned k = 0; k < e[i]; ++k) {
                factor *= value;
            }
            e[i] = 0;
            out.add_term(Monomial(std::move(e)), factor);
        }
        return out;
    }

    [[nodiscard]] std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [m, c] : terms_) {
            const Rational mag = abs(c);
            if (out.empty()) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (m.is_constant()) {
                out += mag.get_str();
            } else {
                out += mag == 1 ? m.to_string() : mag.get_str() + "*" + m.to_string();
            }
        }
        return out;
    }

private:
    void check_dimension(const Polynomial& other) const
    {
        if (other.dimension_ != dimension_) {
            throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(dimension_) +
                                        " vs " + std::to_string(other.dimension_));
        }
    }

    void check_point(std::size_t length) const
    {
        if (length != dimension_) {
            throw std::invalid_argument("evaluation point has length " + std::to_string(length) +
                                        ", expected " + std::to_string(dimension_));
        }
    }

    std::size_t dimension_ = 0;
    TermMap terms_;
};

/// Product of a list of polynomials of the same dimension; 1 for an empty list.
inline Polynomial product(std::size_t dimension, const std::vector<Polynomial>& factors)
{
    Polynomial out(dimension, Rational(1));
    for (const auto& f : factors) {
        out *= f;
    }
    return out;
}

/// a + b·x_i
inline Polynomial affine(std::size_t dimension, std::size_t i, const Rational& a, const Rational& b)
{
    Polynomial p(dimension, a);
    p += Polynomial::variable(dimension, i) * b;
    return p;
}

} // namespace serendipity

#endif // SERENDIPITY_POLYNOMIAL_HPP
