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


// Command-line front end. Every subcommand writes to stdout (or --out) in a
// fixed order so that repeated runs are byte-identical.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nord/bound.hpp"
#include "nord/codes.hpp"
#include "nord/error.hpp"
#include "nord/hermitian.hpp"
#include "nord/io.hpp"
#include "nord/nweight.hpp"
#include "nord/semigroup.hpp"

namespace {

using nord::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw UsageError(what + ": not an integer: " + text);
    }
    if (used != text.size()) throw UsageError(what + ": not an integer: " + text);
    return v;
}

// "a..b", inclusive, a <= b.
std::pair<int, int> parse_range(const std::string& text, const std::string& what) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError(what + ": expected a..b, got " + text);
    const int a = parse_int(text.substr(0, dots), what);
    const int b = parse_int(text.substr(dots + 2), what);
    if (a > b) throw UsageError(what + ": empty range " + text);
    return {a, b};
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        nord::write_text_file(out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------------ semigroup

struct SemigroupArgs {
    std::string generators;
    std::optional<int> curve_q;
    std::string file;
    std::string out;
};

void run_semigroup(const SemigroupArgs& a) {
    const int sources = !a.generators.empty() + a.curve_q.has_value() + !a.file.empty();
    if (sources != 1) throw UsageError("semigroup: give exactly one of --generators, --curve-q, FILE");
    Json j;
    if (!a.generators.empty()) {
        std::vector<int> gens;
        std::stringstream ss(a.generators);
        for (std::string item; std::getline(ss, item, ',');) gens.push_back(parse_int(item, "--generators"));
        j = nord::to_json(nord::NumericalSemigroup::from_generators(gens));
    } else if (a.curve_q) {
        j = nord::to_json(nord::HermitianCurve::make(*a.curve_q).two_point_semigroup());
    } else {
        const Json in = nord::read_json_file(a.file);
        const Json& gaps = in.contains("gaps") ? in["gaps"] : Json();
        const bool two_point = gaps.is_array() && !gaps.empty() && gaps.front().is_array();
        j = two_point ? nord::to_json(nord::two_point_semigroup_from_json(in))
                      : nord::to_json(nord::numerical_semigroup_from_json(in));
    }
    emit(dump(j), a.out);
}

// -------------------------------------------------------------------- profile

struct ProfileArgs {
    std::optional<int> curve_q;
    std::optional<int> gamma;
    std::string semigroup;
    std::string out;
};

void run_profile(const ProfileArgs& a) {
    const int sources = a.curve_q.has_value() + a.gamma.has_value() + !a.semigroup.empty();
    if (sources != 1) throw UsageError("profile: give exactly one of --curve-q, --hyperelliptic-gamma, --semigroup");
    nord::GoodBasisProfile p;
    if (a.curve_q)
        p = nord::HermitianCurve::make(*a.curve_q).profile_closed_form();
    else if (a.gamma)
        p = nord::hyperelliptic_profile(*a.gamma);
    else
        p = nord::tps_profile(nord::two_point_semigroup_from_json(nord::read_json_file(a.semigroup)));
    emit(dump(nord::to_json(p)), a.out);
}

// ---------------------------------------------------------------------- bound

struct BoundArgs {
    std::string profile;
    std::optional<int> ell;
    std::optional<int> m;
    bool table = false;
    std::string ell_range;
    std::string m_range;
    bool csv = false;
    bool diagnose = false;
    std::string out;
};

std::string diagnostic_text(const nord::FormulaDiagnostic& d) {
    std::ostringstream os;
    os << "diagnostic ell=" << d.ell << " m=" << d.m << ": " << d.verdict() << " direct=" << d.direct
       << " formula=" << d.formula << " goppa=" << d.goppa;
    if (d.strict_claim_applies) os << " strict_claim=" << (d.strict_claim_holds ? "holds" : "fails");
    os << " equality_claim=" << (d.equality_claim_holds ? "holds" : "fails") << "\n";
    return os.str();
}

void run_bound(const BoundArgs& a) {
    const nord::GoodBasisProfile p = nord::profile_from_json(nord::read_json_file(a.profile));
    std::ostringstream os;
    if (a.table || a.csv) {
        std::pair<int, int> er, mr;
        if (!a.ell_range.empty())
            er = parse_range(a.ell_range, "--ell-range");
        else if (a.ell)
            er = {*a.ell, *a.ell};
        else
            throw UsageError("bound --table: need --ell-range or --ell");
        if (!a.m_range.empty())
            mr = parse_range(a.m_range, "--m-range");
        else if (a.m)
            mr = {*a.m, *a.m};
        else
            throw UsageError("bound --table: need --m-range or --m");
        const auto rows = nord::bound_table(p, er, mr);
        if (a.csv) {
            os << nord::bound_table_csv(rows);
        } else {
            char line[96];
            std::snprintf(line, sizeof line, "%5s %5s %10s %7s %8s %6s\n", "ell", "m", "n_set_size", "d_nord",
                          "d_goppa", "delta");
            os << line;
            for (const auto& r : rows) {
                std::snprintf(line, sizeof line, "%5d %5d %10d %7d %8d %6d\n", r.ell, r.m, r.n_set_size, r.d_nord,
                              r.d_goppa, r.delta);
                os << line;
            }
        }
        if (a.diagnose)
            for (int ell = er.first; ell <= er.second; ++ell)
                for (int m = mr.first; m <= mr.second; ++m) os << diagnostic_text(nord::formula_diagnostic(p, ell, m));
    } else {
        if (!a.ell || !a.m) throw UsageError("bound: --ell and --m are required without --table");
        const int dn = nord::d_nord(p, *a.ell, *a.m);
        const int dg = nord::d_goppa(*a.ell, *a.m, p.genus());
        os << "d_nord=" << dn << " d_goppa=" << dg << " delta=" << dn - dg << "\n";
        if (a.diagnose) os << diagnostic_text(nord::formula_diagnostic(p, *a.ell, *a.m));
    }
    emit(os.str(), a.out);
}

// ---------------------------------------------------------------------- curve

void run_curve(const std::string& action, int q, const std::string& out) {
    const nord::HermitianCurve c = nord::HermitianCurve::make(q);
    std::ostringstream os;
    if (action == "info") {
        const nord::GoodBasisProfile p = c.profile_closed_form();
        os << "curve y^" << q << " + y = x^" << q + 1 << "\n";
        os << "field " << c.field().describe() << "\n";
        os << "genus " << c.genus() << "\n";
        os << "affine_points " << c.points().size() << "\n";
        os << "code_length " << nord::evaluation_points(c).size() << "\n";
        os << "lambda_rho " << p.lambda_rho() << "\n";
        os << "lambda_sigma " << p.lambda_sigma() << "\n";
        os << "profile " << nord::to_json(p).dump() << "\n";
    } else {
        os << "index x y\n";
        const auto& pts = c.points();
        for (std::size_t i = 0; i < pts.size(); ++i)
            os << i << " " << pts[i].x.index << " " << pts[i].y.index << "\n";
    }
    emit(os.str(), out);
}

// ----------------------------------------------------------------------- code

struct CodeArgs {
    int q = 0;
    int ell = 0;
    int m = 0;
    std::string out;
};

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

// Returns false when any check failed.
bool run_code(const std::string& action, const CodeArgs& a) {
    const nord::HermitianCurve c = nord::HermitianCurve::make(a.q);
    std::ostringstream os;
    bool ok = true;
    if (action == "build") {
        os << dump(nord::to_json(nord::make_code_file(c, a.ell, a.m)));
    } else if (action == "distance") {
        const nord::DistanceReport r = nord::verify_distance(c, a.ell, a.m);
        os << "n=" << r.n << " k_E=" << r.k_e << " k_C=" << r.k_c << " d_true="
           << (r.d_true ? std::to_string(*r.d_true) : "none") << " d_nord=" << r.d_nord << " d_goppa=" << r.d_goppa
           << "\n";
    } else {
        const nord::DistanceReport d = nord::verify_distance(c, a.ell, a.m);
        const nord::DimensionReport dim = nord::verify_dimension(c, a.ell, a.m);
        const nord::SyndromeWeightReport sw = nord::verify_syndrome_weight(c, a.ell, a.m);
        os << "distance " << verdict(d.pass()) << " d_true=" << (d.d_true ? std::to_string(*d.d_true) : "none")
           << " d_nord=" << d.d_nord << " d_goppa=" << d.d_goppa << " goppa=" << verdict(d.goppa_holds()) << "\n";
        os << "dimension " << verdict(dim.pass()) << " dim_L=" << dim.dim_riemann_roch << " dim_E=" << dim.dim_e
           << " expected=" << dim.expected << (dim.applies ? "" : " (injectivity not required)") << "\n";
        os << "syndrome_weight " << verdict(sw.pass()) << " words=" << sw.words_checked << "\n";
        ok = d.pass() && dim.pass() && sw.pass();
        os << "report " << verdict(ok) << "\n";
    }
    emit(os.str(), a.out);
    return ok;
}

// --------------------------------------------------------------------- axioms

struct AxiomArgs {
    std::string model;
    int p = 2;
    int k = 1;
    int bound = 3;
    std::size_t max_sample = nord::kDefaultMaxSample;
    bool filtration = false;
    std::string out;
};

nord::ModelPtr make_model(const AxiomArgs& a) {
    const nord::Field f = nord::Field::make(a.p, a.k);
    if (a.model == "constant") return nord::model_constant(f, 0);
    if (a.model == "ideal") return nord::model_ideal(f, {f.zero(), f.zero(), f.one()});
    if (a.model == "laurent") return nord::model_laurent(f);
    if (a.model == "curve-rho" || a.model == "curve-sigma") {
        if (a.k % 2 != 0)
            throw nord::Error(nord::Errc::UnsupportedQ, "the Hermitian curve needs a square field size");
        int q = 1;
        for (int i = 0; i < a.k / 2; ++i) q *= a.p;
        const auto c = nord::HermitianCurve::make(q);
        return nord::model_curve(c, a.model == "curve-rho" ? nord::CurveSide::Rho : nord::CurveSide::Sigma);
    }
    throw UsageError("axioms: unknown model " + a.model);
}

void run_axioms(const AxiomArgs& a) {
    const nord::ModelPtr model = make_model(a);
    Json j = nord::to_json(nord::axiom_check(*model, a.bound, a.max_sample));
    if (a.filtration) {
        Json both;
        both["axioms"] = std::move(j);
        both["filtration"] = nord::to_json(nord::filtration_check(*model, a.bound, a.max_sample));
        j = std::move(both);
    }
    emit(dump(j), a.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nord: near-order functions, two-point semigroups and the d_NORD bound"};
    app.require_subcommand(1);

    SemigroupArgs sg;
    auto* cmd_sg = app.add_subcommand("semigroup", "numerical or two-point semigroup as JSON");
    cmd_sg->add_option("--generators", sg.generators, "comma-separated generators, e.g. 3,4");
    cmd_sg->add_option("--curve-q", sg.curve_q, "two-point semigroup of the Hermitian curve");
    cmd_sg->add_option("file", sg.file, "JSON file with a gap set to validate");
    cmd_sg->add_option("--out", sg.out, "write to a file instead of stdout");

    ProfileArgs pr;
    auto* cmd_pr = app.add_subcommand("profile", "good-basis profile as JSON");
    cmd_pr->add_option("--curve-q", pr.curve_q, "Hermitian curve over GF(q^2)");
    cmd_pr->add_option("--hyperelliptic-gamma", pr.gamma, "hyperelliptic profile of genus gamma");
    cmd_pr->add_option("--semigroup", pr.semigroup, "two-point semigroup JSON file");
    cmd_pr->add_option("--out", pr.out, "write to a file instead of stdout");

    BoundArgs bd;
    auto* cmd_bd = app.add_subcommand("bound", "d_nord and d_goppa for a profile");
    cmd_bd->add_option("--profile", bd.profile, "profile JSON file")->required();
    cmd_bd->add_option("--ell", bd.ell, "ell");
    cmd_bd->add_option("--m", bd.m, "m");
    cmd_bd->add_flag("--table", bd.table, "tabulate over --ell-range x --m-range");
    cmd_bd->add_option("--ell-range", bd.ell_range, "inclusive range a..b");
    cmd_bd->add_option("--m-range", bd.m_range, "inclusive range a..b");
    cmd_bd->add_flag("--csv", bd.csv, "tabulate as CSV");
    cmd_bd->add_flag("--diagnose", bd.diagnose, "compare with the closed-form value");
    cmd_bd->add_option("--out", bd.out, "write to a file instead of stdout");

    std::string curve_action;
    int curve_q = 0;
    std::string curve_out;
    auto* cmd_cv = app.add_subcommand("curve", "Hermitian curve data");
    cmd_cv->add_option("action", curve_action, "info | points")->required()->check(CLI::IsMember({"info", "points"}));
    cmd_cv->add_option("--q", curve_q, "q in {2,3,4,5}")->required();
    cmd_cv->add_option("--out", curve_out, "write to a file instead of stdout");

    std::string code_action;
    CodeArgs cd;
    auto* cmd_cd = app.add_subcommand("code", "two-point codes C_ell^m on the Hermitian curve");
    cmd_cd->add_option("action", code_action, "build | distance | verify")
        ->required()
        ->check(CLI::IsMember({"build", "distance", "verify"}));
    cmd_cd->add_option("--q", cd.q, "q")->required();
    cmd_cd->add_option("--ell", cd.ell, "ell")->required();
    cmd_cd->add_option("--m", cd.m, "m")->required();
    cmd_cd->add_option("--out", cd.out, "write to a file instead of stdout");

    AxiomArgs ax;
    auto* cmd_ax = app.add_subcommand("axioms", "check N0..N5 and O0..O4 on a finite sample");
    cmd_ax->add_option("--model", ax.model, "constant | ideal | laurent | curve-rho | curve-sigma")->required();
    cmd_ax->add_option("--p", ax.p, "characteristic");
    cmd_ax->add_option("--k", ax.k, "extension degree");
    cmd_ax->add_option("--bound", ax.bound, "sample bound");
    cmd_ax->add_option("--max-sample", ax.max_sample, "largest sample to enumerate");
    cmd_ax->add_flag("--filtration", ax.filtration, "also report the filtration checks");
    cmd_ax->add_option("--out", ax.out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_sg) run_semigroup(sg);
        if (*cmd_pr) run_profile(pr);
        if (*cmd_bd) run_bound(bd);
        if (*cmd_cv) run_curve(curve_action, curve_q, curve_out);
        if (*cmd_cd && !run_code(code_action, cd)) return 1;
        if (*cmd_ax) run_axioms(ax);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nord::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
