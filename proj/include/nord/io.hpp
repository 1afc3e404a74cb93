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


#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "nord/bound.hpp"
#include "nord/codes.hpp"
#include "nord/nweight.hpp"
#include "nord/semigroup.hpp"

namespace nord {

/// Key order is insertion order, so serialized output is reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& s);
Json to_json(const TwoPointSemigroup& t);
Json to_json(const GoodBasisProfile& p);
Json to_json(const AxiomReport& r);
Json to_json(const FiltrationReport& r);

/// {"gaps":[1,2,5]}
NumericalSemigroup numerical_semigroup_from_json(const Json& j);
/// {"gaps":[[0,1],[1,0]]}
TwoPointSemigroup two_point_semigroup_from_json(const Json& j);
/// {"genus":3,"entries":{"1":5,"2":2,"5":1}}; validated.
GoodBasisProfile profile_from_json(const Json& j);

/// Generator of C_ell^m and its parity check, the generator of E_ell^m.
struct CodeFile {
    int q = 0;
    int ell = 0;
    int m = 0;
    int n = 0;
    Matrix generator;
    Matrix parity_check;

    friend bool operator==(const CodeFile&, const CodeFile&) = default;
};

CodeFile make_code_file(const HermitianCurve& c, int ell, int m);
Json to_json(const CodeFile& f);
CodeFile code_file_from_json(const Json& j);

/// Rows of space-separated field indices.
std::string matrix_text(const Matrix& m);

inline constexpr const char* kBoundCsvHeader = "ell,m,n_set_size,d_nord,d_goppa,delta";
std::string bound_table_csv(const std::vector<BoundRow>& rows);
std::vector<BoundRow> parse_bound_csv(const std::string& text);

/// Throws ParseError on unreadable or malformed files.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nord
