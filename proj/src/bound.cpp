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

#include "nord/bound.hpp"

#include <algorithm>
#include <limits>

#include "nord/error.hpp"
#include "nord/parallel.hpp"

namespace nord {

namespace {

void require_m(const GoodBasisProfile& p, int m) {
    if (m < p.lambda_sigma()) {
        throw Error(Errc::MBelowLambda,
                    "m = " + std::to_string(m) + " < Lambda_sigma = " + std::to_string(p.lambda_sigma()));
    }
}

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw Error(Errc::InvalidArgument, std::string(what) + " must be nonnegative");
}

int n_set_size(const GoodBasisProfile& p, int r, int m) {
    int count = 0;
    for (int i = 0; i <= r + 1; ++i) {
        if (p.sigma(i) + capital_sigma(p, r + 1 - i) <= m) ++count;
    }
    return count;
}

}  // namespace

int capital_sigma(const GoodBasisProfile& p, int s) {
    require_nonnegative(s, "s");
    int best = 0;
    for (const auto& [i, v] : p.entries()) {
        if (i > s) break;
        best = std::max(best, v);
    }
    return best;
}

NSet n_set(const GoodBasisProfile& p, int r, int m) {
    require_nonnegative(r, "r");
    require_m(p, m);
    NSet out{r, m, {}};
    for (int i = 0; i <= r + 1; ++i) {
        const int j = r + 1 - i;
        if (p.sigma(i) + capital_sigma(p, j) <= m) out.pairs.emplace_back(i, j);
    }
    return out;
}

int d_nord(const GoodBasisProfile& p, int ell, int m) {
    require_nonnegative(ell, "ell");
    require_m(p, m);
    int best = std::numeric_limits<int>::max();
    for (int r = ell; r <= ell + p.genus(); ++r) best = std::min(best, n_set_size(p, r, m));
    return best;
}

int delta(const GoodBasisProfile& p, int ell, int m) { return d_nord(p, ell, m) - d_goppa(ell, m, p.genus()); }

AbcDecomposition abc_decomposition(const GoodBasisProfile& p, int r, int m) {
    require_nonnegative(r, "r");
    require_m(p, m);
    const int s = p.s_index();
    const int lambda = p.lambda_sigma();
    AbcDecomposition out;
    for (int i = 1; i <= r; ++i) {
        const bool gap = p.sigma(i) > 0;
        if (!gap) {
            out.a.insert(i);
        } else if (i <= r + 1 - s) {
            if (p.sigma(i) + lambda <= m) out.b.insert(i);
        } else if (p.sigma(i) + capital_sigma(p, r + 1 - i) <= m) {
            out.c.insert(i);
        }
    }
    return out;
}

FormulaDiagnostic formula_diagnostic(const GoodBasisProfile& p, int ell, int m) {
    require_nonnegative(ell, "ell");
    const int lambda = p.lambda_sigma();
    if (!(lambda <= m && m < 2 * lambda)) {
        throw Error(Errc::HypothesisNotMet, "requires Lambda_sigma <= m < 2*Lambda_sigma (Lambda_sigma = " +
                                                std::to_string(lambda) + ", m = " + std::to_string(m) + ")");
    }
    const int floor_ell = p.lambda_rho() + p.s_index() - 1;
    if (ell < floor_ell) {
        throw Error(Errc::HypothesisNotMet, "requires ell >= Lambda_rho + s - 1 = " + std::to_string(floor_ell));
    }
    FormulaDiagnostic r;
    r.ell = ell;
    r.m = m;
    r.direct = d_nord(p, ell, m);
    r.formula = ell + 2 - p.genus() + static_cast<int>(abc_decomposition(p, ell, m).a.size());
    r.agree = r.direct == r.formula;
    r.goppa = d_goppa(ell, m, p.genus());
    r.strict_claim_applies = lambda >= p.genus() + 1;
    r.strict_claim_holds = !r.strict_claim_applies || r.direct < r.goppa;
    r.equality_claim_holds = (r.direct == r.goppa) == (lambda == p.genus());
    return r;
}

std::vector<BoundRow> bound_table(const GoodBasisProfile& p, std::pair<int, int> ell_range,
                                  std::pair<int, int> m_range) {
    if (ell_range.first > ell_range.second || m_range.first > m_range.second) return {};
    require_nonnegative(ell_range.first, "ell");
    require_m(p, m_range.first);

    const int ell_count = ell_range.second - ell_range.first + 1;
    const int m_count = m_range.second - m_range.first + 1;
    std::vector<BoundRow> rows(static_cast<std::size_t>(ell_count) * m_count);
    parallel_chunks(rows.size(), [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t k = begin; k < end; ++k) {
            const int ell = ell_range.first + static_cast<int>(k / m_count);
            const int m = m_range.first + static_cast<int>(k % m_count);
            BoundRow& row = rows[k];
            row.ell = ell;
            row.m = m;
            row.n_set_size = n_set_size(p, ell, m);
            row.d_nord = d_nord(p, ell, m);
            row.d_goppa = d_goppa(ell, m, p.genus());
            row.delta = row.d_nord - row.d_goppa;
        }
    });
    return rows;
}

}  // namespace nord
