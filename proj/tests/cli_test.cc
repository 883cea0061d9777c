// Copyright 2026 The telechan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args) {
    std::string cmd = std::string(TELECHAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    Run r;
    if (!pipe) {
        return r;
    }
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count(const std::string &s, const std::string &needle) {
    int n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) {
        n++;
    }
    return n;
}

TEST(Cli, SimulateEquiprobable) {
    auto r = run("simulate --input \"0.6,0,0,0.8\" --channel \"+000000+\"");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count(r.out, "p=0.125000000000"), 8);
}

TEST(Cli, SimulateBasisInput) {
    auto r = run("simulate --input 1,0,0,0 --channel +000000+");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count(r.out, "p=0.125000000000"), 8);
    EXPECT_EQ(count(r.out, "impossible"), 0);
}

TEST(Cli, SimulateComplexInputAndJson) {
    auto r = run("simulate --input \"0.6,0,0,0+0.8i\" --channel 00+00+00 --format json");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"branches\""), std::string::npos);
}

TEST(Cli, SimulateUnnormalizedWarnsButRuns) {
    EXPECT_EQ(run("simulate --input 3,0,0,4 --channel +000000+").code, 0);
}

TEST(Cli, ParseErrorsExitTwo) {
    EXPECT_EQ(run("simulate --input 1,0,0,0 --channel ++").code, 2);
    EXPECT_EQ(run("simulate --input 1,0,0 --channel +000000+").code, 2);
    EXPECT_EQ(run("simulate --input 1,x,0,0 --channel +000000+").code, 2);
    EXPECT_EQ(run("simulate --input 0,0,0,0 --channel +000000+").code, 2);
    EXPECT_EQ(run("classify nonsense").code, 2);
    EXPECT_EQ(run("classify diag --format xml").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify-paper --samples 0").code, 2);
    EXPECT_EQ(run("verify-paper --tolerance -1").code, 2);
}

TEST(Cli, Classify) {
    auto diag = run("classify diag");
    EXPECT_EQ(diag.code, 0);
    EXPECT_NE(diag.out.find("support patterns: 8"), std::string::npos);
    auto top = run("classify --class top-row");
    EXPECT_EQ(top.code, 0);
    EXPECT_NE(top.out.find("support patterns: 0"), std::string::npos);
    auto left = run("classify left-col --format json");
    EXPECT_EQ(left.code, 0);
    EXPECT_NE(left.out.find("\"pattern_count\": 4"), std::string::npos);
}

TEST(Cli, EmitTable) {
    auto r = run("emit-table --channel +000000+ --class diag");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("do nothing"), std::string::npos);
    EXPECT_EQ(run("emit-table --channel ++++++++ --class diag").code, 1);
}

TEST(Cli, OutputIsReproducible) {
    auto a = run("classify anti-diag --format json");
    auto b = run("classify anti-diag --format json");
    EXPECT_EQ(a.out, b.out);
    auto c = run("verify-paper --samples 100 --seed 7");
    auto d = run("verify-paper --samples 100 --seed 7");
    EXPECT_EQ(c.out, d.out);
    EXPECT_NE(c.out.find("100 random bases, seed 7, 0 successes"), std::string::npos);
}

TEST(Cli, UnattainableToleranceFails) {
    auto r = run("verify-paper --samples 10 --tolerance 1e-30");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL  5"), std::string::npos);
}

TEST(Cli, WritesOutFile) {
    std::string path = testing::TempDir() + "telechan_cli_table.json";
    EXPECT_EQ(run("emit-table --channel +000000+ --class diag --format json --out " + path).code, 0);
    FILE *f = fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    fclose(f);
    std::remove(path.c_str());
}

}  // namespace
