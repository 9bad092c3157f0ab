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

#ifndef SERENDIPITY_JSON_HPP
#define SERENDIPITY_JSON_HPP

// JSON forms of the library types:
//   Polynomial  [{"exponents": [int], "coeff": "num/den"}, ...]   (graded-lex order)
//   Face        {"n": int, "fixed": [{"index": int (1-based), "sign": ±1}, ...]}
//   SpaceBasis  {"family", "n", "r", "face", "monomials": [[int]]}

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "assembly.hpp"
#include "bubble.hpp"
#include "cube.hpp"
#include "decomp.hpp"
#include "dofs.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "spaces.hpp"

namespace serendipity {

using nlohmann::json;

inline void to_json(json& j, const Monomial& m) { j = m.exponents(); }

inline void from_json(const json& j, Monomial& m) { m = Monomial(j.get<std::vector<unsigned>>()); }

inline void to_json(json& j, const Polynomial& p)
{
    j = json::array();
    for (const auto& [m, c] : p.terms()) {
        j.push_back({{"exponents", m.exponents()}, {"coeff", to_string(c)}});
    }
}

/// Reads the term array; `dimension` is needed for the zero polynomial and
/// is checked against every term.
inline Polynomial polynomial_from_json(const json& j, std::size_t dimension)
{
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial JSON must be an array of terms");
    }
    Polynomial p(dimension);
    for (const auto& term : j) {
        auto e = term.at("exponents").get<std::vector<unsigned>>();
        if (e.size() != dimension) {
            throw std::invalid_argument("term has " + std::to_string(e.size()) + " exponents, expected " +
                                        std::to_string(dimension));
        }
        const auto& coeff = term.at("coeff");
        const Rational c = coeff.is_string() ? parse_rational(coeff.get<std::string>())
                                             : Rational(coeff.get<long>());
        p.add_term(Monomial(std::move(e)), c);
    }
    return p;
}

inline void to_json(json& j, const Face& f)
{
    json fixed = json::array();
    for (std::size_t i = 0; i < f.ambient_dimension(); ++i) {
        if (f.sign(i) != 0) {
            fixed.push_back({{"index", i + 1}, {"sign", f.sign(i)}});
        }
    }
    j = {{"n", f.ambient_dimension()}, {"fixed", fixed}};
}

inline void from_json(const json& j, Face& f)
{
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::int8_t> coords(n, 0);
    for (const auto& c : j.at("fixed")) {
        const auto index = c.at("index").get<std::size_t>();
        const auto sign = c.at("sign").get<int>();
        if (index < 1 || index > n || (sign != 1 && sign != -1)) {
            throw std::invalid_argument("invalid face constraint");
        }
        coords[index - 1] = static_cast<std::int8_t>(sign);
    }
    f = Face(std::move(coords));
}

inline void to_json(json& j, const SpaceBasis& b)
{
    j = {{"family", to_string(b.family)},
         {"n", b.n},
         {"r", b.degree},
         {"face", b.face},
         {"monomials", b.monomials}};
}

inline void to_json(json& j, const DofFunctional& L)
{
    j = {{"id", L.id}, {"face", L.face}, {"dim", L.face.dimension()}, {"weight", L.weight}};
}

inline void to_json(json& j, const DofLayout& layout)
{
    json rows = json::array();
    for (const auto& row : layout.rows) {
        rows.push_back({{"d", row.d},
                        {"faces", row.faces},
                        {"dofs_per_face", row.dofs_per_face},
                        {"subtotal", row.subtotal}});
    }
    j = {{"n", layout.n}, {"r", layout.r}, {"rows", rows}, {"total", layout.total}};
}

inline void to_json(json& j, const FaceComponent& c)
{
    j = {{"face", c.face}, {"coefficient", c.coefficient}, {"component", c.component}};
}

inline json decomposition_to_json(std::size_t n, int r, const std::string& method, const Polynomial& p,
                                  const std::map<Face, FaceComponent>& parts)
{
    json comps = json::array();
    for (const auto& [f, c] : parts) {
        comps.push_back(c);
    }
    return {{"n", n},
            {"r", r},
            {"method", method},
            {"input", p},
            {"components", comps},
            {"reconstructs", reconstruct(n, parts) == p}};
}

inline json matrix_to_json(const RationalMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_string(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

inline void to_json(json& j, const ContinuityReport& rep)
{
    json trials = json::array();
    for (std::size_t t = 0; t < rep.trials.size(); ++t) {
        const auto& tr = rep.trials[t];
        trials.push_back({{"trial", t},
                          {"left_trace", tr.left_trace},
                          {"right_trace", tr.right_trace},
                          {"equal", tr.equal},
                          {"trace_determined_by_face_dofs", tr.trace_determined_by_face_dofs},
                          {"controls_run", tr.controls_run},
                          {"controls_detected", tr.controls_detected}});
    }
    j = {{"n", rep.n},
         {"r", rep.r},
         {"axis", rep.axis + 1},
         {"seed", rep.seed},
         {"shared_dofs", rep.shared_dofs},
         {"continuous", rep.continuous()},
         {"controls_all_detected", rep.controls_all_detected()},
         {"trials", trials}};
}

} // namespace serendipity

#endif // SERENDIPITY_JSON_HPP
