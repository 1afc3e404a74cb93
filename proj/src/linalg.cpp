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

#include "nord/linalg.hpp"

#include "nord/error.hpp"

namespace nord {

Elem dot(const Field& f, const Row& a, const Row& b) {
    if (a.size() != b.size()) throw Error(Errc::InvalidArgument, "dot product of vectors of different length");
    Elem s = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

int hamming_weight(const Row& v) {
    int w = 0;
    for (Elem e : v) w += !e.is_zero();
    return w;
}

Matrix rref(const Field& f, Matrix m) {
    if (m.empty()) return m;
    const std::size_t cols = m.front().size();
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < cols && lead_row < m.size(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[lead_row]);
        const Elem scale = f.inv(m[lead_row][col]);
        for (auto& e : m[lead_row]) e = f.mul(e, scale);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == lead_row || m[r][col].is_zero()) continue;
            const Elem factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[lead_row][c]));
        }
        ++lead_row;
    }
    m.resize(lead_row);
    return m;
}

int rank(const Field& f, const Matrix& m) { return static_cast<int>(rref(f, m).size()); }

Matrix nullspace(const Field& f, const Matrix& m, int ncols) {
    const Matrix r = rref(f, m);
    std::vector<int> pivot_of_col(ncols, -1);
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (int c = 0; c < ncols; ++c) {
            if (!r[i][c].is_zero()) {
                pivot_of_col[c] = static_cast<int>(i);
                break;
            }
        }
    }
    Matrix basis;
    for (int free = 0; free < ncols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        Row v(ncols, f.zero());
        v[free] = f.one();
        for (int c = 0; c < ncols; ++c) {
            if (pivot_of_col[c] >= 0) v[c] = f.neg(r[pivot_of_col[c]][free]);
        }
        basis.push_back(std::move(v));
    }
    return rref(f, std::move(basis));
}

bool in_row_space(const Field& f, const Matrix& reduced, const Row& v) {
    Row w = v;
    for (const auto& row : reduced) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        if (lead == row.size() || w[lead].is_zero()) continue;
        const Elem factor = w[lead];
        for (std::size_t c = lead; c < w.size(); ++c) w[c] = f.sub(w[c], f.mul(factor, row[c]));
    }
    return hamming_weight(w) == 0;
}

}  // namespace nord
