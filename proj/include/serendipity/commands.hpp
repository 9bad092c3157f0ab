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

#ifndef SERENDIPITY_COMMANDS_HPP
#define SERENDIPITY_COMMANDS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "assembly.hpp"
#include "bubble.hpp"
#include "decomp.hpp"
#include "dofs.hpp"
#include "json.hpp"
#include "parallel.hpp"
#include "sampling.hpp"
#include "spaces.hpp"

namespace serendipity::cli {

inline constexpr std::size_t kMaxDimension = 6;
inline constexpr int kMaxDegree = 12;
inline constexpr std::uint64_t kDefaultSeed = 20110101;

enum class OutputFormat { Text, Json, Csv };

/// Thrown for invalid command-line input; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    int r_min = 1;
    int r_max = 1;
    OutputFormat format = OutputFormat::Text;
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = 25;
    std::size_t axis = 1;  // 1-based
    std::size_t grid = 0;  // points per axis for sampled exports; 0 = none
    std::size_t workers = 0;
    std::string family = "S";
    std::string method = "both";
    std::vector<std::string> checks = {"dims", "unisolvence", "direct-sum", "bubble", "continuity"};
    std::vector<unsigned> alpha;
    std::string poly_json;
};

struct CommandResult {
    std::string output;
    bool pass = true;
};

inline void validate(const RunConfig& cfg)
{
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) {
        throw UsageError("invalid dimension range [" + std::to_string(cfg.n_min) + ", " + std::to_string(cfg.n_max) +
                         "]");
    }
    if (cfg.n_max > kMaxDimension) {
        throw UsageError("n = " + std::to_string(cfg.n_max) + " exceeds the supported maximum " +
                         std::to_string(kMaxDimension));
    }
    if (cfg.r_min < 1 || cfg.r_min > cfg.r_max) {
        throw UsageError("invalid degree range [" + std::to_string(cfg.r_min) + ", " + std::to_string(cfg.r_max) +
                         "]");
    }
    if (cfg.r_max > kMaxDegree) {
        throw UsageError("r = " + std::to_string(cfg.r_max) + " exceeds the supported maximum " +
                         std::to_string(kMaxDegree));
    }
}

namespace detail {

inline std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

struct Cell {
    std::size_t n;
    int r;
};

inline std::vector<Cell> cells(const RunConfig& cfg)
{
    std::vector<Cell> out;
    for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
        for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
            out.push_back({n, r});
        }
    }
    return out;
}

inline void require_single(const RunConfig& cfg)
{
    if (cfg.n_min != cfg.n_max || cfg.r_min != cfg.r_max) {
        throw UsageError(cfg.command + " takes a single --n and --r");
    }
}

} // namespace detail

/// dim S_r(I^n) over the configured grid.
inline CommandResult cmd_table1(const RunConfig& cfg)
{
    validate(cfg);
    std::ostringstream os;
    switch (cfg.format) {
    case OutputFormat::Text: {
        os << "dim S_r(I^n)\n" << detail::pad("n\\r", 4);
        for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
            os << detail::pad(std::to_string(r), 7);
        }
        os << "\n";
        for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
            os << detail::pad(std::to_string(n), 4);
            for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
                os << detail::pad(std::to_string(dim_S_formula(n, r)), 7);
            }
            os << "\n";
        }
        os << "# seed " << cfg.seed << "\n";
        break;
    }
    case OutputFormat::Csv:
        os << "n,r,dim\n";
        for (const auto& c : detail::cells(cfg)) {
            os << c.n << "," << c.r << "," << dim_S_formula(c.n, c.r) << "\n";
        }
        break;
    case OutputFormat::Json: {
        json cells = json::array();
        for (const auto& c : detail::cells(cfg)) {
            cells.push_back({{"n", c.n}, {"r", c.r}, {"dim", dim_S_formula(c.n, c.r)}});
        }
        os << json{{"seed", cfg.seed}, {"cells", cells}}.dump(2) << "\n";
        break;
    }
    }
    return {os.str(), true};
}

/// Dimensions of P_r, S_r (formula and enumeration), Q_r and the inclusion checks.
inline CommandResult cmd_dims(const RunConfig& cfg)
{
    validate(cfg);
    struct Row {
        std::size_t n;
        int r;
        std::size_t p, s_formula, s_basis, q;
        bool inclusions;
    };
    const auto rows = ordered_parallel_map(
        detail::cells(cfg),
        [](const detail::Cell& c) {
            const auto inc = check_inclusions(c.n, c.r);
            return Row{c.n, c.r, inc.dim_P_r, dim_S_formula(c.n, c.r), inc.dim_S_r, dim_Q(c.n, c.r), inc.ok()};
        },
        cfg.workers);
    bool pass = true;
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& row : rows) {
            arr.push_back({{"n", row.n},
                           {"r", row.r},
                           {"dim_P", row.p},
                           {"dim_S_formula", row.s_formula},
                           {"dim_S_basis", row.s_basis},
                           {"dim_Q", row.q},
                           {"inclusions", row.inclusions}});
            pass = pass && row.inclusions && row.s_formula == row.s_basis;
        }
        os << json{{"seed", cfg.seed}, {"rows", arr}}.dump(2) << "\n";
    } else {
        const char sep = cfg.format == OutputFormat::Csv ? ',' : ' ';
        if (cfg.format == OutputFormat::Csv) {
            os << "n,r,dim_P,dim_S_formula,dim_S_basis,dim_Q,inclusions\n";
        } else {
            os << "   n   r   dim_P  dim_S(formula)  dim_S(basis)   dim_Q  P_r<=S_r<=P_{r+n-1}\n";
        }
        for (const auto& row : rows) {
            pass = pass && row.inclusions && row.s_formula == row.s_basis;
            if (cfg.format == OutputFormat::Csv) {
                os << row.n << sep << row.r << sep << row.p << sep << row.s_formula << sep << row.s_basis << sep
                   << row.q << sep << (row.inclusions ? "true" : "false") << "\n";
            } else {
                os << detail::pad(std::to_string(row.n), 4) << detail::pad(std::to_string(row.r), 4)
                   << detail::pad(std::to_string(row.p), 8) << detail::pad(std::to_string(row.s_formula), 16)
                   << detail::pad(std::to_string(row.s_basis), 14) << detail::pad(std::to_string(row.q), 8)
                   << detail::pad(row.inclusions ? "yes" : "NO", 21) << "\n";
            }
        }
        if (cfg.format == OutputFormat::Text) {
            os << "# seed " << cfg.seed << "\n";
        }
    }
    return {os.str(), pass};
}

inline SpaceBasis basis_for(const std::string& family, std::size_t n, int r)
{
    if (family == "S") {
        return basis_S(n, r);
    }
    if (family == "Q") {
        return basis_Q(n, r);
    }
    if (family == "P") {
        return basis_P(n, r);
    }
    throw UsageError("unknown family '" + family + "' (expected P, Q or S)");
}

inline CommandResult cmd_basis(const RunConfig& cfg)
{
    validate(cfg);
    detail::require_single(cfg);
    const auto b = basis_for(cfg.family, cfg.n_min, cfg.r_min);
    std::ostringstream os;
    switch (cfg.format) {
    case OutputFormat::Json:
        os << json(b).dump(2) << "\n";
        break;
    case OutputFormat::Csv:
        throw UsageError("CSV is available for tables only; use --format json or text");
    case OutputFormat::Text:
        os << cfg.family << "_" << b.degree << "(I^" << b.n << "): " << b.size() << " monomials\n";
        for (const auto& m : b.monomials) {
            os << "  " << m.to_string() << "\n";
        }
        os << "# seed " << cfg.seed << "\n";
        break;
    }
    return {os.str(), true};
}

inline CommandResult cmd_dofs(const RunConfig& cfg)
{
    validate(cfg);
    std::ostringstream os;
    bool pass = true;
    const auto cells = detail::cells(cfg);
    if (cfg.format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& c : cells) {
            const auto layout = dof_layout(c.n, c.r);
            pass = pass && layout.total == dim_S_formula(c.n, c.r);
            json entry = layout;
            if (cells.size() == 1) {
                entry["dofs"] = dofs_S(c.n, c.r);
            }
            arr.push_back(entry);
        }
        os << json{{"seed", cfg.seed}, {"layouts", arr}}.dump(2) << "\n";
    } else if (cfg.format == OutputFormat::Csv) {
        os << "n,r,d,faces,dofs_per_face,subtotal\n";
        for (const auto& c : cells) {
            const auto layout = dof_layout(c.n, c.r);
            pass = pass && layout.total == dim_S_formula(c.n, c.r);
            for (const auto& row : layout.rows) {
                os << c.n << "," << c.r << "," << row.d << "," << row.faces << "," << row.dofs_per_face << ","
                   << row.subtotal << "\n";
            }
        }
    } else {
        for (const auto& c : cells) {
            const auto layout = dof_layout(c.n, c.r);
            const auto dim = dim_S_formula(c.n, c.r);
            pass = pass && layout.total == dim;
            os << "S_" << c.r << "(I^" << c.n << ")\n";
            os << "d, #faces, dofs-per-face, subtotal\n";
            for (const auto& row : layout.rows) {
                os << row.d << ", " << row.faces << ", " << row.dofs_per_face << ", " << row.subtotal << "\n";
            }
            os << "total " << layout.total << " (dim " << dim << ")\n";
        }
        os << "# seed " << cfg.seed << "\n";
    }
    return {os.str(), pass};
}

struct VerifyItem {
    std::size_t n = 0;
    int r = 0;
    std::string check;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline bool wants(const RunConfig& cfg, const std::string& check)
{
    for (const auto& c : cfg.checks) {
        if (c == check || c == "all") {
            return true;
        }
    }
    return false;
}

/// Runs the selected checks for each (n, r) cell.
inline std::vector<VerifyItem> run_verify(const RunConfig& cfg)
{
    validate(cfg);
    for (const auto& c : cfg.checks) {
        if (c != "all" && c != "dims" && c != "unisolvence" && c != "direct-sum" && c != "bubble" &&
            c != "continuity") {
            throw UsageError("unknown check '" + c + "'");
        }
    }
    auto timed = [](VerifyItem& item, auto&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    const auto per_cell = ordered_parallel_map(
        detail::cells(cfg),
        [&](const detail::Cell& c) {
            std::vector<VerifyItem> items;
            if (wants(cfg, "dims")) {
                VerifyItem item{c.n, c.r, "dims", false, "", 0.0};
                timed(item, [&] {
                    const auto formula = dim_S_formula(c.n, c.r);
                    const auto basis = basis_S(c.n, c.r).size();
                    const auto dofs = dofs_S(c.n, c.r).size();
                    item.pass = formula == basis && basis == dofs;
                    item.detail = "formula " + std::to_string(formula) + ", basis " + std::to_string(basis) +
                                  ", dofs " + std::to_string(dofs);
                });
                items.push_back(item);
            }
            if (wants(cfg, "unisolvence")) {
                VerifyItem item{c.n, c.r, "unisolvence", false, "", 0.0};
                timed(item, [&] {
                    const auto rep = check_unisolvence(c.n, c.r);
                    item.pass = rep.unisolvent && rep.inductive;
                    item.detail = "rank " + std::to_string(rep.rank) + "/" + std::to_string(rep.dim) +
                                  (rep.inductive ? ", inductive check ok" : ", inductive check FAILED");
                });
                items.push_back(item);
            }
            if (wants(cfg, "direct-sum")) {
                VerifyItem item{c.n, c.r, "direct-sum", false, "", 0.0};
                timed(item, [&] {
                    const auto rep = verify_direct_sum(c.n, c.r);
                    item.pass = rep.ok();
                    item.detail = "sum dim V_f " + std::to_string(rep.sum_of_dims) + ", rank " +
                                  std::to_string(rep.rank) + "/" + std::to_string(rep.dim_S);
                });
                items.push_back(item);
            }
            if (wants(cfg, "bubble")) {
                VerifyItem item{c.n, c.r, "bubble", false, "", 0.0};
                timed(item, [&] {
                    const auto rep = bubble_factor_nullspace_check(c.n, c.r);
                    item.pass = rep.ok();
                    item.detail = "facet-vanishing dim " + std::to_string(rep.facet_vanishing_dim) + " (expected " +
                                  std::to_string(rep.expected_dim) + ")";
                });
                items.push_back(item);
            }
            if (wants(cfg, "continuity")) {
                VerifyItem item{c.n, c.r, "continuity", false, "", 0.0};
                timed(item, [&] {
                    if (cfg.axis < 1 || cfg.axis > c.n) {
                        item.pass = true;
                        item.detail = "skipped (axis > n)";
                        return;
                    }
                    const auto rep = check_continuity(c.n, c.r, cfg.axis - 1, cfg.trials, cfg.seed);
                    item.pass = rep.ok();
                    item.detail = std::to_string(rep.trials.size()) + " trials, " + std::to_string(rep.shared_dofs) +
                                  " shared dofs, controls " + (rep.controls_all_detected() ? "detected" : "MISSED");
                });
                items.push_back(item);
            }
            return items;
        },
        cfg.workers);
    std::vector<VerifyItem> out;
    for (const auto& items : per_cell) {
        out.insert(out.end(), items.begin(), items.end());
    }
    return out;
}

/// Report text is deterministic; per-item timings go to `timing_log` when given.
inline CommandResult cmd_verify(const RunConfig& cfg, std::ostream* timing_log = nullptr)
{
    const auto items = run_verify(cfg);
    bool pass = true;
    for (const auto& item : items) {
        pass = pass && item.pass;
        if (timing_log != nullptr) {
            *timing_log << "n=" << item.n << " r=" << item.r << " " << item.check << ": " << std::fixed
                        << std::setprecision(3) << item.seconds << " s\n";
        }
    }
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& item : items) {
            arr.push_back(
                {{"n", item.n}, {"r", item.r}, {"check", item.check}, {"pass", item.pass}, {"detail", item.detail}});
        }
        os << json{{"seed", cfg.seed}, {"trials", cfg.trials}, {"pass", pass}, {"items", arr}}.dump(2) << "\n";
    } else if (cfg.format == OutputFormat::Csv) {
        os << "n,r,check,pass,detail\n";
        for (const auto& item : items) {
            os << item.n << "," << item.r << "," << item.check << "," << (item.pass ? "pass" : "fail") << ",\""
               << item.detail << "\"\n";
        }
    } else {
        for (const auto& item : items) {
            os << (item.pass ? "PASS" : "FAIL") << "  n=" << item.n << " r=" << item.r << "  " << item.check << "  "
               << item.detail << "\n";
        }
        os << (pass ? "all checks passed" : "verification FAILED") << "\n# seed " << cfg.seed << "\n";
    }
    return {os.str(), pass};
}

/// Polynomial from --alpha or --poly.
inline Polynomial decompose_input(const RunConfig& cfg)
{
    if (!cfg.alpha.empty()) {
        if (cfg.alpha.size() != cfg.n_min) {
            throw UsageError("--alpha has " + std::to_string(cfg.alpha.size()) + " exponents but n = " +
                             std::to_string(cfg.n_min));
        }
        return Polynomial(Monomial(cfg.alpha));
    }
    if (!cfg.poly_json.empty()) {
        try {
            return polynomial_from_json(json::parse(cfg.poly_json), cfg.n_min);
        } catch (const json::exception& e) {
            throw UsageError(std::string("cannot parse --poly: ") + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("cannot parse --poly: ") + e.what());
        }
    }
    throw UsageError("decompose needs --alpha or --poly");
}

inline CommandResult cmd_decompose(const RunConfig& cfg)
{
    validate(cfg);
    detail::require_single(cfg);
    if (cfg.method != "constructive" && cfg.method != "solve" && cfg.method != "both") {
        throw UsageError("--method must be constructive, solve or both");
    }
    const std::size_t n = cfg.n_min;
    const int r = cfg.r_min;
    const Polynomial p = decompose_input(cfg);
    if (p.superlinear_degree() > r) {
        throw std::domain_error("input has superlinear degree " + std::to_string(p.superlinear_degree()) +
                                " > r = " + std::to_string(r) + "; it is not in S_r");
    }
    json reports = json::array();
    std::map<Face, FaceComponent> constructive;
    std::map<Face, FaceComponent> solved;
    bool pass = true;
    if (cfg.method != "solve") {
        constructive = expand_polynomial(p, r);
        reports.push_back(decomposition_to_json(n, r, "constructive", p, constructive));
        pass = pass && reconstruct(n, constructive) == p;
    }
    if (cfg.method != "constructive") {
        solved = decompose(p, n, r);
        reports.push_back(decomposition_to_json(n, r, "solve", p, solved));
        pass = pass && reconstruct(n, solved) == p;
    }
    const bool agree = cfg.method != "both" || constructive == solved;
    pass = pass && agree;
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        os << json{{"seed", cfg.seed}, {"reports", reports}, {"methods_agree", agree}}.dump(2) << "\n";
    } else if (cfg.format == OutputFormat::Csv) {
        throw UsageError("CSV is available for tables only; use --format json or text");
    } else {
        os << "p = " << p.to_string() << " in S_" << r << "(I^" << n << ")\n";
        const auto& parts = cfg.method == "solve" ? solved : constructive;
        for (const auto& [f, c] : parts) {
            os << "  " << f.to_string() << ": (" << c.coefficient.to_string() << ") * b_f\n";
        }
        os << "reconstructs: " << (reconstruct(n, parts) == p ? "yes" : "NO") << "\n";
        if (cfg.method == "both") {
            os << "constructive and linear-solve decompositions agree: " << (agree ? "yes" : "NO") << "\n";
        }
        os << "# seed " << cfg.seed << "\n";
    }
    return {os.str(), pass};
}

inline CommandResult cmd_continuity(const RunConfig& cfg)
{
    validate(cfg);
    detail::require_single(cfg);
    if (cfg.axis < 1 || cfg.axis > cfg.n_min) {
        throw UsageError("--axis must lie in [1, n]");
    }
    const auto rep = check_continuity(cfg.n_min, cfg.r_min, cfg.axis - 1, cfg.trials, cfg.seed);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        os << json(rep).dump(2) << "\n";
    } else if (cfg.format == OutputFormat::Csv) {
        os << "trial,equal,controls_run,controls_detected\n";
        for (std::size_t t = 0; t < rep.trials.size(); ++t) {
            os << t << "," << (rep.trials[t].equal ? "true" : "false") << "," << rep.trials[t].controls_run << ","
               << rep.trials[t].controls_detected << "\n";
        }
    } else {
        os << "S_" << rep.r << "(I^" << rep.n << "), shared facet x" << cfg.axis << " = +1 | -1, " << rep.shared_dofs
           << " shared dofs\n";
        os << "traces equal in " << rep.trials.size() << " trials: " << (rep.continuous() ? "yes" : "NO") << "\n";
        os << "perturbation controls detected: " << (rep.controls_all_detected() ? "all" : "NOT ALL") << "\n";
        os << "trace determined by shared dofs: " << (rep.trace_determinism() ? "yes" : "NO") << "\n";
        os << "# seed " << rep.seed << "\n";
    }
    return {os.str(), rep.ok()};
}

/// Nodal-basis export: each shape function with its dual DOF.
inline json nodal_to_json(const NodalElement& e, std::uint64_t seed)
{
    json fns = json::array();
    for (std::size_t j = 0; j < e.shape_functions.size(); ++j) {
        fns.push_back({{"dof", e.dofs[j]}, {"poly", e.shape_functions[j]}});
    }
    return {{"family", to_string(e.basis.family)},
            {"n", e.basis.n},
            {"r", e.basis.degree},
            {"seed", seed},
            {"shape_functions", fns}};
}

/// Float samples of every shape function on a uniform grid.
inline json grid_to_json(const NodalElement& e, std::size_t per_axis, std::uint64_t seed)
{
    const auto grid = uniform_grid(e.basis.n, per_axis);
    json points = json::array();
    json values = json::array();
    for (const auto& p : grid) {
        const auto fp = to_double(p);
        points.push_back(fp);
        json row = json::array();
        for (const auto& phi : e.shape_functions) {
            row.push_back(phi.evaluate(std::span<const double>(fp)));
        }
        values.push_back(row);
    }
    const auto fidelity = float_fidelity(e.shape_functions, per_axis);
    return {{"n", e.basis.n},
            {"r", e.basis.degree},
            {"seed", seed},
            {"points_per_axis", per_axis},
            {"points", points},
            {"values", values},
            {"max_error_vs_exact", fidelity.max_error}};
}

inline void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    f << content;
    if (!f) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

/// Writes basis, DOF tables, nodal basis, decomposition reports and (with
/// --grid) sampled values for each (n, r) into the --out directory.
inline CommandResult cmd_export(const RunConfig& cfg)
{
    validate(cfg);
    if (cfg.out.empty()) {
        throw UsageError("export needs --out DIR");
    }
    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    std::ostringstream os;
    bool pass = true;
    for (const auto& c : detail::cells(cfg)) {
        const std::string stem = "S" + std::to_string(c.r) + "_n" + std::to_string(c.n);
        const auto element = serendipity_element(c.n, c.r);
        write_file(dir / (stem + "_basis.json"), json(element.basis).dump(2) + "\n");

        const auto layout = dof_layout(c.n, c.r);
        json dofs = layout;
        dofs["dofs"] = element.dofs;
        dofs["seed"] = cfg.seed;
        write_file(dir / (stem + "_dofs.json"), dofs.dump(2) + "\n");
        std::ostringstream csv;
        csv << "d,faces,dofs_per_face,subtotal\n";
        for (const auto& row : layout.rows) {
            csv << row.d << "," << row.faces << "," << row.dofs_per_face << "," << row.subtotal << "\n";
        }
        write_file(dir / (stem + "_dofs.csv"), csv.str());

        write_file(dir / (stem + "_nodal.json"), nodal_to_json(element, cfg.seed).dump(2) + "\n");

        const GeometricDecomposition decomposition(c.n, c.r);
        json decomps = json::array();
        for (const auto& m : element.basis.monomials) {
            const Polynomial p(m);
            const auto parts = decomposition.decompose(p);
            pass = pass && reconstruct(c.n, parts) == p;
            decomps.push_back(decomposition_to_json(c.n, c.r, "solve", p, parts));
        }
        write_file(dir / (stem + "_decomposition.json"),
                   json{{"seed", cfg.seed}, {"monomials", decomps}}.dump(2) + "\n");

        std::vector<std::string> written = {"basis.json", "dofs.json", "dofs.csv", "nodal.json", "decomposition.json"};
        if (cfg.grid > 0) {
            const auto g = grid_to_json(element, cfg.grid, cfg.seed);
            pass = pass && g.at("max_error_vs_exact").get<double>() <= 1e-12;
            write_file(dir / (stem + "_grid.json"), g.dump(2) + "\n");
            written.emplace_back("grid.json");
        }
        os << stem << ":";
        for (const auto& w : written) {
            os << " " << stem << "_" << w;
        }
        os << "\n";
    }
    return {os.str(), pass};
}

} // namespace serendipity::cli

#endif // SERENDIPITY_COMMANDS_HPP
