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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nord/semigroup.hpp"

namespace nord {

// Everything here is a function of a GoodBasisProfile alone. Queries with
// m below Lambda_sigma are rejected with MBelowLambda.

/// Sigma(s) = max{sigma(f_0), ..., sigma(f_s)}.
int capital_sigma(const GoodBasisProfile& p, int s);

/// N_r^m: pairs (i,j), i+j = r+1, sigma(f_i) + Sigma(j) <= m, sorted by i.
struct NSet {
    int r = 0;
    int m = 0;
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
};

NSet n_set(const GoodBasisProfile& p, int r, int m);

/// min #N_r^m over r in [ell, ell + gamma].
int d_nord(const GoodBasisProfile& p, int ell, int m);

/// ell + m - 2*gamma + 2, returned unclamped.
constexpr int d_goppa(int ell, int m, int gamma) { return ell + m - 2 * gamma + 2; }

int delta(const GoodBasisProfile& p, int ell, int m);

/// Split of the interior indices of N_r^m: A = nongaps of H(rho) in [1,r],
/// B and C = rho-gaps on either side of r+1-s.
struct AbcDecomposition {
    std::set<int> a;
    std::set<int> b;
    std::set<int> c;

    int total() const { return 2 + static_cast<int>(a.size() + b.size() + c.size()); }
};

AbcDecomposition abc_decomposition(const GoodBasisProfile& p, int r, int m);

/// Compares the closed-form value ell + 2 - gamma + #A_ell^m, valid under
/// Lambda_sigma <= m < 2*Lambda_sigma and ell >= Lambda_rho + s - 1, with the
/// enumerated bound. It reports; it never decides which side is right.
struct FormulaDiagnostic {
    int ell = 0;
    int m = 0;
    int direct = 0;
    int formula = 0;
    bool agree = false;
    int goppa = 0;
    // Claim: Lambda_sigma >= gamma + 1 implies d_nord < d_goppa.
    bool strict_claim_applies = false;
    bool strict_claim_holds = true;
    // Claim: d_nord == d_goppa iff Lambda_sigma == gamma.
    bool equality_claim_holds = false;

    std::string verdict() const { return agree ? "AGREE" : "DISAGREE"; }
};

FormulaDiagnostic formula_diagnostic(const GoodBasisProfile& p, int ell, int m);

struct BoundRow {
    int ell = 0;
    int m = 0;
    int n_set_size = 0;
    int d_nord = 0;
    int d_goppa = 0;
    int delta = 0;

    friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

/// Rows in ell-major order over the inclusive ranges. Rows may be computed
/// on several workers; the order of the result is fixed.
std::vector<BoundRow> bound_table(const GoodBasisProfile& p, std::pair<int, int> ell_range,
                                  std::pair<int, int> m_range);

}  // namespace nord
