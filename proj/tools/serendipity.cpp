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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <serendipity/commands.hpp>

namespace {

using serendipity::cli::OutputFormat;
using serendipity::cli::RunConfig;
using serendipity::cli::UsageError;

struct Options {
    std::optional<std::size_t> n;
    std::optional<int> r;
    std::optional<std::size_t> n_max;
    std::optional<int> r_max;
    std::string format = "text";
    std::string out;
    std::uint64_t seed = serendipity::cli::kDefaultSeed;
    std::size_t trials = 25;
    std::size_t axis = 1;
    std::size_t grid = 0;
    std::size_t workers = 0;
    std::string family = "S";
    std::string method = "both";
    std::vector<std::string> checks;
    std::vector<unsigned> alpha;
    std::string poly;
};

// --n alone selects one dimension; --n-max selects [--n or 1, --n-max];
// neither selects [1, default_max]. Same for r.
template <typename T>
std::pair<T, T> resolve_range(const std::optional<T>& lo, const std::optional<T>& hi, T default_max)
{
    if (hi) {
        return {lo.value_or(T{1}), *hi};
    }
    if (lo) {
        return {*lo, *lo};
    }
    return {T{1}, default_max};
}

RunConfig make_config(const std::string& command, const Options& o, std::size_t default_n, int default_r)
{
    RunConfig cfg;
    cfg.command = command;
    std::tie(cfg.n_min, cfg.n_max) = resolve_range(o.n, o.n_max, default_n);
    std::tie(cfg.r_min, cfg.r_max) = resolve_range(o.r, o.r_max, default_r);
    static const std::map<std::string, OutputFormat> formats = {
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
    cfg.format = formats.at(o.format);
    cfg.out = o.out;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.axis = o.axis;
    cfg.grid = o.grid;
    cfg.workers = o.workers;
    cfg.family = o.family;
    cfg.method = o.method;
    if (!o.checks.empty()) {
        cfg.checks = o.checks;
    }
    cfg.alpha = o.alpha;
    cfg.poly_json = o.poly;
    return cfg;
}

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--n", o.n, "Space dimension (or lower end of the range with --n-max)")->check(CLI::PositiveNumber);
    sub->add_option("--r", o.r, "Polynomial degree (or lower end of the range with --r-max)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--n-max", o.n_max, "Upper end of the dimension range")->check(CLI::PositiveNumber);
    sub->add_option("--r-max", o.r_max, "Upper end of the degree range")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out, "Output file (directory for export)");
    sub->add_option("--seed", o.seed, "Random seed recorded in every report");
    sub->add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Serendipity finite elements on the n-cube: exact construction and verification"};
    app.require_subcommand(1);
    Options o;

    auto* table1 = app.add_subcommand("table1", "dim S_r(I^n) table (default n in [1,5], r in [1,8])");
    auto* dims = app.add_subcommand("dims", "Dimensions of P_r, S_r, Q_r and inclusion checks");
    auto* basis = app.add_subcommand("basis", "Monomial basis of S_r, Q_r or P_r");
    auto* dofs = app.add_subcommand("dofs", "Degree-of-freedom layout per face dimension");
    auto* verify = app.add_subcommand("verify", "Exact verification suite");
    auto* decompose = app.add_subcommand("decompose", "Geometric decomposition of a polynomial in S_r");
    auto* continuity = app.add_subcommand("continuity", "Two-element shared-face continuity trials");
    auto* export_cmd = app.add_subcommand("export", "Write basis, DOFs, nodal basis and decompositions");
    for (auto* sub : {table1, dims, basis, dofs, verify, decompose, continuity, export_cmd}) {
        add_common(sub, o);
    }
    basis->add_option("--family", o.family, "P, Q or S")->check(CLI::IsMember({"P", "Q", "S"}));
    for (auto* sub : {verify, continuity}) {
        sub->add_option("--trials", o.trials, "Continuity trials per cell");
        sub->add_option("--axis", o.axis, "Shared-facet axis (1-based)")->check(CLI::PositiveNumber);
    }
    verify->add_option("--checks", o.checks, "Subset of dims,unisolvence,direct-sum,bubble,continuity")
        ->delimiter(',');
    decompose->add_option("--alpha", o.alpha, "Monomial exponents, e.g. 1,3")->delimiter(',');
    decompose->add_option("--poly", o.poly, "Polynomial as JSON term array");
    decompose->add_option("--method", o.method, "constructive, solve or both")
        ->check(CLI::IsMember({"constructive", "solve", "both"}));
    export_cmd->add_option("--grid", o.grid, "Also sample nodal functions on this many points per axis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        serendipity::cli::CommandResult result;
        std::string name = app.get_subcommands().front()->get_name();
        if (name == "table1") {
            result = serendipity::cli::cmd_table1(make_config(name, o, 5, 8));
        } else if (name == "dims") {
            result = serendipity::cli::cmd_dims(make_config(name, o, 5, 8));
        } else if (name == "basis") {
            result = serendipity::cli::cmd_basis(make_config(name, o, 2, 2));
        } else if (name == "dofs") {
            result = serendipity::cli::cmd_dofs(make_config(name, o, 3, 4));
        } else if (name == "verify") {
            result = serendipity::cli::cmd_verify(make_config(name, o, 2, 4), &std::cerr);
        } else if (name == "decompose") {
            auto cfg = make_config(name, o, 1, 1);
            if (!o.n && !o.alpha.empty()) {
                cfg.n_min = cfg.n_max = o.alpha.size();
            }
            result = serendipity::cli::cmd_decompose(cfg);
        } else if (name == "continuity") {
            result = serendipity::cli::cmd_continuity(make_config(name, o, 2, 3));
        } else {
            result = serendipity::cli::cmd_export(make_config(name, o, 2, 2));
        }

        if (!o.out.empty() && name != "export") {
            serendipity::cli::write_file(o.out, result.output);
        } else {
            std::cout << result.output;
        }
        return result.pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
