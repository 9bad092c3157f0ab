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

#ifndef SERENDIPITY_RATIONAL_HPP
#define SERENDIPITY_RATIONAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace serendipity {

// Exact coefficient field. mpq_class keeps values canonical (lowest terms,
// positive denominator, zero is 0/1) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical exact text form "num/den"; the denominator is always written.
inline std::string to_string(const Rational& q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Parses "num/den" or a bare integer "num". Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    Rational q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: " + s);
    }
    q.canonicalize();
    return q;
}

/// Exact ∫_{-1}^{1} x^k dx: 0 for odd k, 2/(k+1) for even k.
inline Rational interval_moment(unsigned k)
{
    if (k % 2 == 1) {
        return Rational(0);
    }
    return Rational(2, k + 1);
}

/// Binomial coefficient with C(a,b) = 0 whenever b < 0 or a < b.
inline std::size_t binomial(long a, long b)
{
    if (b < 0 || a < b || a < 0) {
        return 0;
    }
    if (b > a - b) {
        b = a - b;
    }
    std::size_t result = 1;
    for (long i = 1; i <= b; ++i) {
        // result * (a - b + i) is divisible by i at every step
        result = result * static_cast<std::size_t>(a - b + i) / static_cast<std::size_t>(i);
    }
    return result;
}

inline std::size_t ipow(std::size_t base, unsigned exp)
{
    std::size_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        result *= base;
    }
    return result;
}

} // namespace serendipity

#endif // SERENDIPITY_RATIONAL_HPP
