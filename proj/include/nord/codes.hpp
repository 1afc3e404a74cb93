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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nord/bound.hpp"
#include "nord/hermitian.hpp"
#include "nord/linalg.hpp"

namespace nord {

/// Linear code given by a generator matrix, kept in reduced row echelon
/// form so that equal codes compare equal.
class LinearCode {
public:
    LinearCode(Field field, int length, Matrix generator);

    const Field& field() const { return field_; }
    int length() const { return n_; }
    int dimension() const { return static_cast<int>(generator_.size()); }
    const Matrix& generator() const { return generator_; }

    LinearCode dual() const;
    bool contains(const Row& word) const;
    /// Every codeword of this code is orthogonal to `word`.
    bool orthogonal_to(const Row& word) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.generator_ == b.generator_;
    }

private:
    Field field_;
    int n_ = 0;
    Matrix generator_;
};

/// Affine points other than (0,0) in lexicographic order; n = q^3 - 1.
std::vector<Point> evaluation_points(const HermitianCurve& c);

/// Rows are the images of `basis` under evaluation at `evaluation_points`.
Matrix evaluation_matrix(const HermitianCurve& c, const std::vector<Monomial>& basis);

/// E = image of R_ell^m; requires m >= Lambda_sigma.
LinearCode build_E(const HermitianCurve& c, int ell, int m);
/// C = E^perp.
LinearCode build_C(const HermitianCurve& c, int ell, int m);

/// Largest message space `min_distance_bruteforce` will enumerate.
inline constexpr std::uint64_t kMaxBruteForceWords = std::uint64_t{1} << 24;

/// Minimum weight over all nonzero codewords; nullopt for the zero code.
std::optional<int> min_distance_bruteforce(const LinearCode& code);

/// Least L with E_L^m = F^n.
int saturation_index(const HermitianCurve& c, int m);

struct SyndromeMatrix {
    Row word;
    Matrix h;        // h_t = evaluation of f_t, t = 0..L
    Matrix entries;  // s_ij = (h_i * h_j) . y

    int size() const { return static_cast<int>(entries.size()); }
};

SyndromeMatrix syndrome_matrix(const HermitianCurve& c, int m, const Row& y, int L);
int syndrome_rank(const Field& f, const SyndromeMatrix& s);

/// Zero pattern of the syndrome matrix along N_ell^m for a word in
/// C_ell^m \ C_{ell+1}^m.
struct LayerPatternReport {
    int ell = 0;
    int m = 0;
    int weight = 0;
    int rank = 0;
    int n_set_size = 0;
    bool indices_monotone = true;   // i increasing, j decreasing
    bool zeros_above = true;        // s_{i_u j_v} = 0 for u < v
    bool nonzero_diagonal = true;   // s_{i_u j_u} != 0
    bool minor_nonsingular = true;  // rows i_*, columns j_* have full rank
    bool rank_bound = true;         // rank(S) >= #N_ell^m
    bool weight_bound = true;       // wt(y) >= rank(S)
    std::vector<std::string> violations;

    bool pass() const {
        return indices_monotone && zeros_above && nonzero_diagonal && minor_nonsingular && rank_bound && weight_bound;
    }
};

LayerPatternReport verify_layer_pattern(const HermitianCurve& c, int ell, int m, const Row& y);

struct DistanceReport {
    int ell = 0;
    int m = 0;
    int n = 0;
    int k_e = 0;
    int k_c = 0;
    std::optional<int> d_true;  // nullopt for the zero code
    int d_nord = 0;
    int d_goppa = 0;

    bool pass() const { return !d_true || *d_true >= d_nord; }
    bool goppa_holds() const { return !d_true || d_goppa <= 0 || *d_true >= d_goppa; }
};

DistanceReport verify_distance(const HermitianCurve& c, int ell, int m);

/// dim E_ell^m against ell + m + 1 - gamma (meaningful when ell + m < n).
struct DimensionReport {
    int dim_riemann_roch = 0;
    int dim_e = 0;
    int expected = 0;
    bool applies = false;  // ell + m < n
    bool pass() const { return dim_riemann_roch == expected && (!applies || dim_e == expected); }
};

DimensionReport verify_dimension(const HermitianCurve& c, int ell, int m);

/// wt(y) >= rank S(y) for every y in C_ell^m.
struct SyndromeWeightReport {
    std::uint64_t words_checked = 0;
    std::optional<Row> counterexample;
    bool pass() const { return !counterexample; }
};

SyndromeWeightReport verify_syndrome_weight(const HermitianCurve& c, int ell, int m);

/// Calls visit(word) for every codeword in message-index order (zero word
/// first). Throws SearchTooLarge above kMaxBruteForceWords.
void for_each_codeword(const LinearCode& code, const std::function<void(const Row&)>& visit);

}  // namespace nord
