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

#ifndef SERENDIPITY_SAMPLING_HPP
#define SERENDIPITY_SAMPLING_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"

namespace serendipity {

/// Uniform tensor grid on [-1,1]^n with `per_axis` points per axis, as exact
/// rationals; the first coordinate varies slowest.
inline std::vector<std::vector<Rational>> uniform_grid(std::size_t n, std::size_t per_axis)
{
    if (per_axis < 2) {
        throw std::invalid_argument("grid needs at least two points per axis");
    }
    std::vector<Rational> axis(per_axis);
    for (std::size_t k = 0; k < per_axis; ++k) {
        axis[k] = Rational(static_cast<long>(2 * k), static_cast<long>(per_axis - 1)) - 1;
        axis[k].canonicalize();
    }
    std::vector<std::vector<Rational>> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<Rational> p(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = axis[idx[i]];
        }
        out.push_back(std::move(p));
        std::size_t i = n;
        while (i > 0 && ++idx[i - 1] == per_axis) {
            idx[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            break;
        }
    }
    return out;
}

inline std::vector<double> to_double(const std::vector<Rational>& p)
{
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i].get_d();
    }
    return out;
}

struct FloatFidelity {
    std::size_t samples = 0;
    double max_error = 0.0;  // relative where the exact value is nonzero, absolute at exact zeros
};

/// Compares double evaluation at the rounded grid points with exact rational
/// evaluation at the grid points, over every polynomial in `polys`.
inline FloatFidelity float_fidelity(const std::vector<Polynomial>& polys, std::size_t per_axis)
{
    FloatFidelity out;
    if (polys.empty()) {
        return out;
    }
    const auto grid = uniform_grid(polys.front().dimension(), per_axis);
    for (const auto& point : grid) {
        const auto fpoint = to_double(point);
        for (const auto& p : polys) {
            const Rational exact = p.evaluate(std::span<const Rational>(point));
            const double approx = p.evaluate(std::span<const double>(fpoint));
            const double e = exact.get_d();
            const double err = e == 0.0 && exact == 0 ? std::abs(approx) : std::abs(approx - e) / std::abs(e);
            out.max_error = std::max(out.max_error, err);
            ++out.samples;
        }
    }
    return out;
}

} // namespace serendipity

#endif // SERENDIPITY_SAMPLING_HPP
