/*
 * Copyright 2026 The sunrise-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Exercises the installed command-line binary end to end. The build passes
// the binary path and the bundled data directory in as macros; configs
// resolve through $SUNRISE_CONFIG_PATH so the tests run from any cwd.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    ::setenv("SUNRISE_CONFIG_PATH", SUNRISE_DATA_DIR, 1);
    const std::string cmd = std::string(SUNRISE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli: tables reconciliation") {
    const auto r = run_cli("tables --id T3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("table,row,col,", 0) == 0);
    CHECK(r.out.find("T3,sunrise,perf_tops_mm2,") != std::string::npos);

    const auto all = run_cli("tables --format md");
    CHECK(all.exit_code == 0);
    for (const char* id : {"# T1:", "# T4:", "# T7:"})
        CHECK(all.out.find(id) != std::string::npos);
}

TEST_CASE("cli: output is deterministic across runs") {
    const auto a = run_cli("tables --format json");
    const auto b = run_cli("tables --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const auto s1 = run_cli("simulate --format csv");
    const auto s2 = run_cli("simulate --format csv");
    CHECK(s1.out == s2.out);
}

TEST_CASE("cli: simulate with bundled presets") {
    const auto r = run_cli("simulate --model resnet50 --arch sunrise-40nm --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["total_cycles"] == 216893u);
    CHECK(j["per_layer"].size() == 72u);

    const auto text = run_cli("simulate");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("throughput") != std::string::npos);
    CHECK(text.out.find("layer,kind,") != std::string::npos);

    const auto batched = run_cli("simulate --batch 16 --format json");
    const auto jb = nlohmann::json::parse(batched.out);
    CHECK(jb["throughput_inf_s"].get<double>() > j["throughput_inf_s"].get<double>());
}

TEST_CASE("cli: project and cost") {
    const auto p = run_cli("project --chip sunrise --to 7 --dram 1y");
    CHECK(p.exit_code == 0);
    CHECK(p.out.find("branch: performance") != std::string::npos);

    const auto all = run_cli("project --chip all --to 7");
    CHECK(all.out.find("chip-b") != std::string::npos);

    const auto c = run_cli("cost --chip sunrise --format csv");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("T4,sunrise,die_cost_usd,") != std::string::npos);
    CHECK(c.out.find("chip-a") == std::string::npos);   // filtered out
}

TEST_CASE("cli: sweep emits one row per point in declaration order") {
    const auto r = run_cli("sweep --vary uce_sync_cycles=0,64,128 --batch 1");
    REQUIRE(r.exit_code == 0);

    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < r.out.size()) {
        const auto nl = r.out.find('\n', pos);
        lines.push_back(r.out.substr(pos, nl - pos));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 4u);
    CHECK(lines[0].rfind("uce_sync_cycles,total_cycles,", 0) == 0);
    CHECK(lines[1].rfind("0,", 0) == 0);
    CHECK(lines[2].rfind("64,", 0) == 0);
    CHECK(lines[3].rfind("128,", 0) == 0);

    // More sync can only slow the run down.
    auto cycles = [&](const std::string& line) {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        return std::stoull(line.substr(a + 1, b - a - 1));
    };
    CHECK(cycles(lines[1]) <= cycles(lines[2]));
    CHECK(cycles(lines[2]) <= cycles(lines[3]));
}

TEST_CASE("cli: sweep rejects unknown fields") {
    const auto r = run_cli("sweep --vary warp_factor=9");
    CHECK(r.exit_code == 1);
}

TEST_CASE("cli: interconnect summary") {
    const auto r = run_cli("interconnect");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("hitoc") != std::string::npos);
    CHECK(r.out.find("125 TB/s") != std::string::npos);

    const auto one = run_cli("interconnect --tech tsv --bits 1e9");
    CHECK(one.exit_code == 0);
    CHECK(one.out.find("interposer") == std::string::npos);
}

TEST_CASE("cli: validate") {
    const auto ok = run_cli(std::string("validate --arch ") + SUNRISE_DATA_DIR +
                            "/archs/sunrise-40nm.json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("ok") != std::string::npos);

    const auto none = run_cli("validate");
    CHECK(none.exit_code == 1);
}

TEST_CASE("cli: exit codes distinguish failure kinds") {
    CHECK(run_cli("tables --id T9").exit_code == 1);               // validation
    CHECK(run_cli("simulate --arch no-such-arch").exit_code == 2); // io
    CHECK(run_cli("frobnicate").exit_code == 1);                   // bad subcommand
    CHECK(run_cli("tables --frobnicate").exit_code == 1);          // bad flag
    CHECK(run_cli("--help").exit_code == 0);
}
