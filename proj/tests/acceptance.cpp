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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nord/bound.hpp"
#include "nord/codes.hpp"
#include "nord/error.hpp"
#include "nord/hermitian.hpp"
#include "nord/io.hpp"
#include "nord/nweight.hpp"
#include "nord/semigroup.hpp"
#include "oracles.hpp"

#ifndef NORD_CLI
#error "NORD_CLI must name the command-line binary"
#endif

namespace {

using Clock = std::chrono::steady_clock;

// Collects failure notes for one criterion.
struct Outcome {
    std::vector<std::string> notes;
    void expect(bool ok, const std::string& what) {
        if (!ok) notes.push_back(what);
    }
};

int run(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) out.notes.push_back("took longer than " + std::to_string(limit_s) + " s");
    const bool pass = out.notes.empty();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  (" << buf << ")\n";
    for (std::size_t i = 0; i < out.notes.size() && i < 10; ++i) std::cout << "    " << out.notes[i] << "\n";
    std::cout.flush();
    return pass ? 0 : 1;
}

std::string kv(const std::vector<std::pair<std::string, std::string>>& w) {
    std::string s;
    for (const auto& [k, v] : w) s += (s.empty() ? "" : ", ") + k + "=" + v;
    return s;
}

void expect_axioms(Outcome& out, const nord::AxiomReport& r, const std::string& label) {
    for (auto name : {"N0", "N1", "N2", "N3", "N4", "N5"}) {
        const auto& c = r.at(name);
        out.expect(c.pass, label + " " + name + " failed: " + kv(c.witness));
    }
}

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& cmd) {
    Captured c;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return c;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, got);
    const int raw = pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

}  // namespace

int main() {
    int failures = 0;

    failures += run(1, "Laurent model over GF(2), GF(4): N0-N5 pass, order axioms fail", 60, [](Outcome& out) {
        for (unsigned k : {1u, 2u}) {
            const auto model = nord::model_laurent(nord::Field::make(2, k));
            const auto r = nord::axiom_check(*model, 3);
            const std::string label = "GF(" + std::to_string(1u << k) + ")";
            expect_axioms(out, r, label);
            out.expect(!r.order(), label + " passed every order axiom");
            bool witnessed = false;
            for (auto name : {"O0", "O1", "O2", "O3", "O4"})
                if (!r.at(name).pass && !r.at(name).witness.empty()) witnessed = true;
            out.expect(witnessed, label + " order failure without a witness");
            out.expect(r.at("order_classification").pass, label + " order classification inconsistent");
        }
    });

    failures += run(2, "Hermitian q=2 rho and sigma: N0-N5 pass on R_6^6, U_rho and U_sigma meet in F", 120,
                    [](Outcome& out) {
                        const auto c = nord::HermitianCurve::make(2);
                        const auto rho = nord::model_curve(c, nord::CurveSide::Rho);
                        const auto sigma = nord::model_curve(c, nord::CurveSide::Sigma);
                        expect_axioms(out, nord::axiom_check(*rho, 6), "rho");
                        expect_axioms(out, nord::axiom_check(*sigma, 6), "sigma");
                        for (const auto& f : rho->sample(6, nord::kDefaultMaxSample)) {
                            if (f.is_zero()) continue;
                            const bool both_units = rho->weight(f) <= 0 && sigma->weight(f) <= 0;
                            if (both_units != f.is_constant())
                                out.expect(false, "unit intersection differs from F at " + rho->format(f));
                        }
                    });

    failures += run(3, "profile agreement for q in {2,3} and gap bijection", 10, [](Outcome& out) {
        for (int q : {2, 3}) {
            const auto c = nord::HermitianCurve::make(q);
            const auto closed = c.profile_closed_form();
            const auto from_tps = nord::tps_profile(c.two_point_semigroup());
            const std::string label = "q=" + std::to_string(q);
            out.expect(closed == from_tps, label + ": closed form differs from column minima");
            const int box = 4 * c.genus() + 2;
            out.expect(closed.entries() == oracle::column_minimum_profile(oracle::two_point_gaps(q, box), box),
                       label + ": differs from the dimension-count oracle");
            out.expect(nord::profile_check_gap_bijection(closed).pass, label + ": gap bijection fails");
        }
        out.expect(nord::HermitianCurve::make(3).profile_closed_form().entries() ==
                       std::map<int, int>{{1, 5}, {2, 2}, {5, 1}},
                   "q=3 profile is not {1:5, 2:2, 5:1}");
    });

    failures += run(4, "hyperelliptic N-set sizes, d_nord = ell+2 for m >= 2*Lambda, window, floor", 0,
                    [](Outcome& out) {
                        for (int gamma : {1, 2, 3, 5}) {
                            const auto p = nord::hyperelliptic_profile(gamma);
                            const std::string g = "gamma=" + std::to_string(gamma);
                            for (int m = gamma; m < 2 * gamma; ++m)
                                for (int r = gamma; r <= gamma + 12; ++r) {
                                    const int want = r + 1 > m ? r + m - 2 * gamma + 2 : r + 2;
                                    const int got = nord::n_set(p, r, m).size();
                                    out.expect(got == want, g + " m=" + std::to_string(m) + " r=" + std::to_string(r) +
                                                                ": #N=" + std::to_string(got) + " expected " +
                                                                std::to_string(want));
                                }
                            for (int m = 2 * p.lambda_sigma(); m <= 2 * p.lambda_sigma() + 3; ++m)
                                for (int ell = 0; ell <= 20; ++ell)
                                    out.expect(nord::d_nord(p, ell, m) == ell + 2,
                                               g + ": d_nord != ell+2 at ell=" + std::to_string(ell));
                            for (int m = p.lambda_sigma(); m <= 2 * p.lambda_sigma() + 1; ++m)
                                for (int ell = 0; ell <= 20; ++ell) {
                                    int wide = 1 << 30;
                                    for (int r = ell; r <= ell + gamma + 50; ++r)
                                        wide = std::min(wide, nord::n_set(p, r, m).size());
                                    const int dn = nord::d_nord(p, ell, m);
                                    out.expect(dn == wide, g + ": window minimum differs at ell=" + std::to_string(ell));
                                    if (ell >= gamma)
                                        out.expect(dn >= ell - gamma + 1,
                                                   g + ": below ell-gamma+1 at ell=" + std::to_string(ell));
                                }
                        }
                    });

    failures += run(5, "gamma=2, (ell,m)=(2,3): d_nord=4, d_goppa=3, delta=+1", 0, [](Outcome& out) {
        const auto p = nord::hyperelliptic_profile(2);
        out.expect(nord::d_nord(p, 2, 3) == 4, "d_nord");
        out.expect(nord::d_goppa(2, 3, 2) == 3, "d_goppa");
        out.expect(nord::delta(p, 2, 3) == 1, "delta");
    });

    failures += run(6, "closed-form diagnostic: (4,3) DISAGREE 5/6, (3,3) AGREE 4/4", 0, [](Outcome& out) {
        const auto p = nord::hyperelliptic_profile(2);
        const auto a = nord::formula_diagnostic(p, 4, 3);
        out.expect(a.verdict() == "DISAGREE" && a.direct == 5 && a.formula == 6,
                   "(4,3): " + a.verdict() + " " + std::to_string(a.direct) + "/" + std::to_string(a.formula));
        const auto b = nord::formula_diagnostic(p, 3, 3);
        out.expect(b.verdict() == "AGREE" && b.direct == 4 && b.formula == 4,
                   "(3,3): " + b.verdict() + " " + std::to_string(b.direct) + "/" + std::to_string(b.formula));
    });

    failures += run(7, "q=2 codes: d_true >= d_nord and d_goppa, dim E = ell+m+1-gamma", 300, [](Outcome& out) {
        const auto c = nord::HermitianCurve::make(2);
        int checked = 0;
        for (int m = 1; m <= 3; ++m)
            for (int ell = 0; ell <= 12; ++ell) {
                const auto r = nord::verify_distance(c, ell, m);
                if (r.k_c < 1 || r.k_c > 6) continue;
                ++checked;
                const std::string at = "(" + std::to_string(ell) + "," + std::to_string(m) + ")";
                out.expect(r.pass(), at + ": d_true below d_nord");
                out.expect(r.goppa_holds(), at + ": d_true below d_goppa");
                const auto d = nord::verify_dimension(c, ell, m);
                if (ell + m < 7) out.expect(d.dim_e == ell + m + 1 - c.genus(), at + ": dim E");
            }
        out.expect(checked > 0, "no (ell,m) pair in range");
    });

    failures += run(8, "q=2, (2,1) and (1,1): wt >= rank S(y), layer zero pattern and rank >= #N", 120,
                    [](Outcome& out) {
                        const auto c = nord::HermitianCurve::make(2);
                        for (auto [ell, m] : {std::pair{2, 1}, {1, 1}}) {
                            const std::string at = "(" + std::to_string(ell) + "," + std::to_string(m) + ")";
                            out.expect(nord::verify_syndrome_weight(c, ell, m).pass(), at + ": wt < rank S(y)");
                            const auto here = nord::build_C(c, ell, m);
                            const auto next = nord::build_C(c, ell + 1, m);
                            int layer = 0;
                            nord::for_each_codeword(here, [&](const nord::Row& y) {
                                if (next.contains(y)) return;
                                ++layer;
                                const auto r = nord::verify_layer_pattern(c, ell, m, y);
                                if (!r.pass())
                                    out.expect(false, at + ": pattern fails" +
                                                          (r.violations.empty() ? "" : ": " + r.violations[0]));
                            });
                            out.expect(layer > 0, at + ": empty layer");
                        }
                    });

    failures += run(9, "bound --table and code build are byte-identical across runs and NORD_THREADS", 0,
                    [](Outcome& out) {
                        const auto dir = std::filesystem::temp_directory_path() / "nord_acceptance";
                        std::filesystem::create_directories(dir);
                        const auto profile = (dir / "q3.json").string();
                        nord::write_text_file(profile,
                                              nord::to_json(nord::HermitianCurve::make(3).profile_closed_form()).dump());
                        const std::string cli = NORD_CLI;
                        const std::vector<std::string> commands{
                            cli + " bound --profile " + profile + " --table --ell-range 0..40 --m-range 5..12",
                            cli + " bound --profile " + profile + " --table --ell-range 0..40 --m-range 5..12 --csv",
                            cli + " code build --q 2 --ell 2 --m 1",
                            cli + " code build --q 3 --ell 10 --m 6",
                        };
                        for (const auto& cmd : commands) {
                            std::string first;
                            bool have = false;
                            for (const char* threads : {"1", "4", "1", "4"}) {
                                const auto r = capture("NORD_THREADS=" + std::string(threads) + " " + cmd);
                                out.expect(r.status == 0, "exit " + std::to_string(r.status) + ": " + cmd);
                                out.expect(!r.out.empty(), "no output: " + cmd);
                                if (!have)
                                    first = r.out, have = true;
                                else
                                    out.expect(r.out == first, "output differs with NORD_THREADS=" +
                                                                   std::string(threads) + ": " + cmd);
                            }
                        }
                        std::filesystem::remove_all(dir);
                    });

    std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << "\n";
    return failures == 0 ? 0 : 1;
}
