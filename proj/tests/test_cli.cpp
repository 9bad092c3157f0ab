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

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(SERENDIPITY_CLI) + " " + args + " 2>/dev/null";
    Run result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, Table1Text)
{
    const auto r = run("table1");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dim S_r(I^n)"), std::string::npos);
    // Row n = 3 of the default table.
    EXPECT_NE(r.out.find("   3      8     20     32     50     74    105    144    192"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("# seed 20110101"), std::string::npos);
}

TEST(Cli, Table1Json)
{
    const auto r = run("table1 --n 5 --r 8 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.at("cells").size(), 1U);
    EXPECT_EQ(j.at("cells")[0].at("dim").get<int>(), 2202);
}

TEST(Cli, Deterministic)
{
    const auto a = run("continuity --n 2 --r 2 --trials 5 --seed 42 --format json");
    const auto b = run("continuity --n 2 --r 2 --trials 5 --seed 42 --format json");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto c = run("verify --n 2 --r 3");
    const auto d = run("verify --n 2 --r 3 --workers 2");
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run("no-such-command").code, 2);
    EXPECT_EQ(run("table1 --n 0").code, 2);
    EXPECT_EQ(run("verify --n 9 --r 2").code, 2);
    EXPECT_EQ(run("basis --family X").code, 2);
    // x1²·x2² has superlinear degree 4 > 3.
    EXPECT_EQ(run("decompose --alpha 2,2 --r 3").code, 1);
}

TEST(Cli, DecomposeReconstructs)
{
    const auto r = run("decompose --alpha 1,3 --r 3 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NE(r.out.find("\"reconstructs\": true"), std::string::npos) << r.out;
    EXPECT_FALSE(j.empty());
}

TEST(Cli, DofsLayout)
{
    const auto r = run("dofs --n 3 --r 4");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("total 50"), std::string::npos) << r.out;
}

TEST(Cli, ExportWritesFiles)
{
    const auto dir = std::filesystem::temp_directory_path() / "serendipity_cli_export";
    std::filesystem::remove_all(dir);
    const auto r = run("export --n 2 --r 3 --grid 5 --out " + dir.string());
    ASSERT_EQ(r.code, 0);
    for (const char* suffix : {"basis.json", "dofs.json", "dofs.csv", "nodal.json", "decomposition.json", "grid.json"}) {
        const auto path = dir / (std::string("S3_n2_") + suffix);
        ASSERT_TRUE(std::filesystem::exists(path)) << path;
        if (path.extension() == ".json") {
            const auto parsed = nlohmann::json::parse(slurp(path), nullptr, false);
            EXPECT_FALSE(parsed.is_discarded()) << path;
        }
    }
    const auto basis = nlohmann::json::parse(slurp(dir / "S3_n2_basis.json"));
    EXPECT_EQ(basis.at("monomials").size(), 12U);
    std::filesystem::remove_all(dir);
}
