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


#include "nord/io.hpp"

#include <fstream>
#include <sstream>

#include "nord/error.hpp"

namespace nord {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (Elem e : row) r.push_back(e.index);
        rows.push_back(std::move(r));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of rows");
    Matrix m;
    for (const auto& row : j) {
        if (!row.is_array()) bad(std::string(what) + " rows must be arrays");
        Row r;
        for (const auto& e : row) {
            if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0))
                bad(std::string(what) + " entries must be field indices");
            r.push_back(Elem{e.get<std::uint32_t>()});
        }
        m.push_back(std::move(r));
    }
    return m;
}

Json checks_json(const std::vector<Check>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        Json e;
        e["axiom"] = c.name;
        e["verdict"] = c.pass ? "PASS" : "FAIL";
        if (!c.pass || !c.witness.empty()) {
            Json w = Json::object();
            for (const auto& [k, v] : c.witness) w[k] = v;
            e["witness"] = std::move(w);
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

Json to_json(const NumericalSemigroup& s) {
    Json j;
    j["gaps"] = Json::array();
    for (int g : s.gaps()) j["gaps"].push_back(g);
    return j;
}

Json to_json(const TwoPointSemigroup& t) {
    Json j;
    j["gaps"] = Json::array();
    for (const Pair& p : t.gaps()) j["gaps"].push_back(Json::array({p.alpha, p.beta}));
    return j;
}

Json to_json(const GoodBasisProfile& p) {
    Json j;
    j["genus"] = p.genus();
    j["entries"] = Json::object();
    for (const auto& [i, v] : p.entries()) j["entries"][std::to_string(i)] = v;
    return j;
}

Json to_json(const AxiomReport& r) {
    Json j;
    j["model"] = r.model;
    j["sample"] = r.sample;
    j["sample_size"] = r.sample_size;
    j["claims"] = {{"n_order", r.claims.n_order}, {"n_weight", r.claims.n_weight}, {"order", r.claims.order}};
    j["summary"] = {{"n_order", r.n_order()},
                    {"n_weight", r.n_weight()},
                    {"order", r.order()},
                    {"units_are_constants", r.units_are_constants}};
    j["verdicts"] = checks_json(r.verdicts);
    return j;
}

Json to_json(const FiltrationReport& r) {
    Json j;
    j["model"] = r.model;
    j["sample"] = r.sample;
    j["sample_size"] = r.sample_size;
    j["values"] = r.values;
    j["representatives"] = r.representatives;
    j["ell"] = r.ell;
    j["caveat"] = r.caveat;
    j["pass"] = r.pass();
    j["checks"] = checks_json(r.checks);
    return j;
}

NumericalSemigroup numerical_semigroup_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gaps") || !j["gaps"].is_array()) bad("expected {\"gaps\":[...]}");
    std::set<int> gaps;
    for (const auto& g : j["gaps"]) gaps.insert(as_int(g, "gap"));
    return NumericalSemigroup::from_gaps(std::move(gaps));
}

TwoPointSemigroup two_point_semigroup_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gaps") || !j["gaps"].is_array()) bad("expected {\"gaps\":[[a,b],...]}");
    std::set<Pair> gaps;
    for (const auto& g : j["gaps"]) {
        if (!g.is_array() || g.size() != 2) bad("two-point gaps must be [alpha,beta] pairs");
        const int a = as_int(g[0], "alpha"), b = as_int(g[1], "beta");
        if (a < 0 || b < 0) bad("gap coordinates must be nonnegative");
        gaps.insert(Pair{a, b});
    }
    return TwoPointSemigroup::from_gaps(std::move(gaps));
}

GoodBasisProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("genus")) bad("profile needs \"genus\"");
    const int genus = as_int(j["genus"], "genus");
    std::map<int, int> entries;
    if (j.contains("entries")) {
        if (!j["entries"].is_object()) bad("\"entries\" must be an object");
        for (const auto& [k, v] : j["entries"].items()) {
            std::size_t used = 0;
            int key = 0;
            try {
                key = std::stoi(k, &used);
            } catch (const std::exception&) {
                bad("profile key \"" + k + "\" is not an integer");
            }
            if (used != k.size()) bad("profile key \"" + k + "\" is not an integer");
            entries[key] = as_int(v, "profile value");
        }
    }
    return GoodBasisProfile::make(genus, std::move(entries));
}

CodeFile make_code_file(const HermitianCurve& c, int ell, int m) {
    const LinearCode e = build_E(c, ell, m);
    const LinearCode code = e.dual();
    return CodeFile{c.q(), ell, m, e.length(), code.generator(), e.generator()};
}

Json to_json(const CodeFile& f) {
    Json j;
    j["q"] = f.q;
    j["ell"] = f.ell;
    j["m"] = f.m;
    j["n"] = f.n;
    j["generator"] = matrix_json(f.generator);
    j["parity_check"] = matrix_json(f.parity_check);
    return j;
}

CodeFile code_file_from_json(const Json& j) {
    if (!j.is_object()) bad("code file must be an object");
    for (const char* key : {"q", "ell", "m", "n", "generator", "parity_check"})
        if (!j.contains(key)) bad(std::string("code file lacks \"") + key + "\"");
    CodeFile f;
    f.q = as_int(j["q"], "q");
    f.ell = as_int(j["ell"], "ell");
    f.m = as_int(j["m"], "m");
    f.n = as_int(j["n"], "n");
    f.generator = matrix_from_json(j["generator"], "generator");
    f.parity_check = matrix_from_json(j["parity_check"], "parity_check");
    for (const Matrix* mat : {&f.generator, &f.parity_check})
        for (const auto& row : *mat)
            if (static_cast<int>(row.size()) != f.n) bad("matrix row length differs from n");
    return f;
}

std::string matrix_text(const Matrix& m) {
    std::string out;
    for (const auto& row : m) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(row[i].index);
        }
        out += '\n';
    }
    return out;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
    std::string out = std::string(kBoundCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.ell) + "," + std::to_string(r.m) + "," + std::to_string(r.n_set_size) + "," +
               std::to_string(r.d_nord) + "," + std::to_string(r.d_goppa) + "," + std::to_string(r.delta) + "\n";
    }
    return out;
}

std::vector<BoundRow> parse_bound_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kBoundCsvHeader) bad("bound CSV must start with the header line");
    std::vector<BoundRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string cell;
        std::vector<int> v;
        while (std::getline(fields, cell, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stoi(cell, &used));
                if (used != cell.size()) bad("bad CSV cell \"" + cell + "\"");
            } catch (const std::invalid_argument&) {
                bad("bad CSV cell \"" + cell + "\"");
            } catch (const std::out_of_range&) {
                bad("bad CSV cell \"" + cell + "\"");
            }
        }
        if (v.size() != 6) bad("bound CSV rows need 6 fields: " + line);
        rows.push_back(BoundRow{v[0], v[1], v[2], v[3], v[4], v[5]});
    }
    return rows;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
    out << text;
    if (!out) throw Error(Errc::InvalidArgument, "write failed for " + path);
}

}  // namespace nord
