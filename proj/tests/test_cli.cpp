/*
 * Copyright 2026 The nord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "nord/io.hpp"

namespace {

struct Result {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr folded into the captured text.
Result nord_cli(const std::string& args) {
    Result r;
    const std::string cmd = std::string(NORD_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() : path(std::filesystem::temp_directory_path() / "nord_cli_test") {
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("bound on the genus-2 hyperelliptic profile") {
    TempDir dir;
    const auto hyper2 = dir.file("hyper2.json");
    REQUIRE(nord_cli("profile --hyperelliptic-gamma 2 --out " + hyper2).status == 0);
    CHECK(nord::profile_from_json(nord::read_json_file(hyper2)) == nord::hyperelliptic_profile(2));

    const auto ok = nord_cli("bound --profile " + hyper2 + " --ell 2 --m 3");
    CHECK(ok.status == 0);
    CHECK(ok.out == "d_nord=4 d_goppa=3 delta=1\n");

    const auto low = nord_cli("bound --profile " + hyper2 + " --ell 2 --m 1");
    CHECK(low.status == 1);
    CHECK(low.out.find("MBelowLambda") != std::string::npos);

    const auto diag = nord_cli("bound --profile " + hyper2 + " --ell 4 --m 3 --diagnose");
    CHECK(diag.out.find("DISAGREE direct=5 formula=6") != std::string::npos);

    const auto csv = nord_cli("bound --profile " + hyper2 + " --table --ell-range 2..4 --m-range 3..3 --csv");
    CHECK(csv.status == 0);
    CHECK(csv.out == "ell,m,n_set_size,d_nord,d_goppa,delta\n2,3,4,4,3,1\n3,3,4,4,4,0\n4,3,5,5,5,0\n");
    CHECK(nord::parse_bound_csv(csv.out).size() == 3);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(nord_cli("").status == 2);
    CHECK(nord_cli("frobnicate").status == 2);
    CHECK(nord_cli("curve info").status == 2);
    CHECK(nord_cli("curve info --q 2 --bogus").status == 2);
    CHECK(nord_cli("code build --q 2 --ell 2").status == 2);
    CHECK(nord_cli("axioms --model nonsense").status == 2);
    CHECK(nord_cli("semigroup --generators 3,4 --curve-q 2").status == 2);
    TempDir dir;
    const auto p = dir.file("p.json");
    nord_cli("profile --hyperelliptic-gamma 1 --out " + p);
    CHECK(nord_cli("bound --profile " + p + " --table --ell-range 4..2 --m-range 1..2").status == 2);
    CHECK(nord_cli("bound --profile " + p + " --table --ell-range 4-2 --m-range 1..2").status == 2);
    CHECK(nord_cli("--help").status == 0);
}

TEST_CASE("library errors exit with 1") {
    CHECK(nord_cli("semigroup --generators 2,4").out.find("NotCoprime") != std::string::npos);
    CHECK(nord_cli("curve info --q 7").status == 1);
    CHECK(nord_cli("profile --semigroup /nonexistent/file.json").status == 1);
    CHECK(nord_cli("axioms --model curve-rho --p 2 --k 3").out.find("UnsupportedQ") != std::string::npos);
}

TEST_CASE("semigroups and profiles") {
    CHECK(nord::Json::parse(nord_cli("semigroup --generators 3,4").out).dump() == R"({"gaps":[1,2,5]})");
    CHECK(nord::Json::parse(nord_cli("semigroup --curve-q 2").out).dump() == R"({"gaps":[[0,1],[1,0]]})");
    TempDir dir;
    const auto t = dir.file("t.json");
    REQUIRE(nord_cli("semigroup --curve-q 3 --out " + t).status == 0);
    CHECK(nord_cli("semigroup " + t).status == 0);
    const auto prof = nord_cli("profile --semigroup " + t);
    CHECK(nord::Json::parse(prof.out).dump() == R"({"genus":3,"entries":{"1":5,"2":2,"5":1}})");
    CHECK(nord::Json::parse(nord_cli("profile --curve-q 3").out) == nord::Json::parse(prof.out));
}

TEST_CASE("curve") {
    const auto info = nord_cli("curve info --q 2");
    CHECK(info.status == 0);
    CHECK(info.out.find("genus 1\n") != std::string::npos);
    const auto pts = nord_cli("curve points --q 2");
    CHECK(pts.out.rfind("index x y\n0 0 0\n", 0) == 0);
    CHECK(std::count(pts.out.begin(), pts.out.end(), '\n') == 9);
}

TEST_CASE("code") {
    const auto verify = nord_cli("code verify --q 2 --ell 2 --m 1");
    CHECK(verify.status == 0);
    CHECK(verify.out.find("report PASS") != std::string::npos);
    TempDir dir;
    const auto file = dir.file("c.json");
    REQUIRE(nord_cli("code build --q 2 --ell 2 --m 1 --out " + file).status == 0);
    const auto loaded = nord::code_file_from_json(nord::read_json_file(file));
    CHECK(loaded == nord::make_code_file(nord::HermitianCurve::make(2), 2, 1));
    CHECK(nord_cli("code distance --q 2 --ell 3 --m 2").out.find("d_true=5") != std::string::npos);
    CHECK(nord_cli("code build --q 3 --ell 2 --m 1").out.find("MBelowLambda") != std::string::npos);
}

TEST_CASE("axioms") {
    const auto r = nord_cli("axioms --model ideal --p 2 --k 1 --bound 3");
    CHECK(r.status == 0);
    const auto j = nord::Json::parse(r.out);
    CHECK(j["model"].get<std::string>().find("ideal") != std::string::npos);
    CHECK(j["summary"]["n_order"] == true);
    const auto f = nord::Json::parse(nord_cli("axioms --model laurent --p 2 --k 1 --bound 2 --filtration").out);
    CHECK(f.contains("filtration"));
    CHECK(nord_cli("axioms --model constant --p 3 --k 1 --bound 2").status == 0);
    CHECK(nord_cli("axioms --model curve-sigma --p 2 --k 2 --bound 2").status == 0);
}
