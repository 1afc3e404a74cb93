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

#include "nord/codes.hpp"

#include <atomic>

#include "nord/error.hpp"
#include "nord/parallel.hpp"

namespace nord {

namespace {

std::uint64_t message_count(const LinearCode& code) {
    const std::uint64_t q = code.field().size();
    std::uint64_t total = 1;
    for (int i = 0; i < code.dimension(); ++i) {
        total *= q;
        if (total > kMaxBruteForceWords) {
            throw Error(Errc::SearchTooLarge, std::to_string(q) + "^" + std::to_string(code.dimension()) +
                                                  " messages exceed the brute-force limit");
        }
    }
    return total;
}

// Walks messages [begin, end) in index order, keeping the codeword current.
class CodewordCursor {
public:
    CodewordCursor(const LinearCode& code, std::uint64_t start)
        : f_(code.field()), g_(code.generator()), digits_(g_.size(), 0), word_(code.length(), f_.zero()) {
        const std::uint32_t q = f_.size();
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            digits_[i] = static_cast<std::uint32_t>(start % q);
            start /= q;
            if (digits_[i] != 0) axpy(i, Elem{digits_[i]});
        }
    }

    const Row& word() const { return word_; }

    void advance() {
        const std::uint32_t q = f_.size();
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            const Elem old{digits_[i]};
            digits_[i] = (digits_[i] + 1) % q;
            axpy(i, f_.sub(Elem{digits_[i]}, old));
            if (digits_[i] != 0) break;
        }
    }

private:
    void axpy(std::size_t row, Elem c) {
        for (std::size_t j = 0; j < word_.size(); ++j) word_[j] = f_.add(word_[j], f_.mul(c, g_[row][j]));
    }

    const Field& f_;
    const Matrix& g_;
    std::vector<std::uint32_t> digits_;
    Row word_;
};

GoodBasisProfile curve_profile(const HermitianCurve& c) { return c.profile_closed_form(); }

void require_m(const HermitianCurve& c, int m) {
    const int lambda = curve_profile(c).lambda_sigma();
    if (m < lambda) {
        throw Error(Errc::MBelowLambda, "m = " + std::to_string(m) + " < Lambda_sigma = " + std::to_string(lambda));
    }
}

}  // namespace

LinearCode::LinearCode(Field field, int length, Matrix generator) : field_(std::move(field)), n_(length) {
    for (const auto& row : generator) {
        if (static_cast<int>(row.size()) != n_) throw Error(Errc::InvalidArgument, "generator row has wrong length");
        for (Elem e : row)
            if (!field_.contains(e)) throw Error(Errc::InvalidArgument, "generator entry outside the field");
    }
    generator_ = rref(field_, std::move(generator));
}

LinearCode LinearCode::dual() const { return LinearCode(field_, n_, nullspace(field_, generator_, n_)); }

bool LinearCode::contains(const Row& word) const {
    return static_cast<int>(word.size()) == n_ && in_row_space(field_, generator_, word);
}

bool LinearCode::orthogonal_to(const Row& word) const {
    for (const auto& row : generator_)
        if (!dot(field_, row, word).is_zero()) return false;
    return true;
}

std::vector<Point> evaluation_points(const HermitianCurve& c) {
    std::vector<Point> out;
    for (const Point& p : c.points())
        if (!(p.x.is_zero() && p.y.is_zero())) out.push_back(p);
    return out;
}

Matrix evaluation_matrix(const HermitianCurve& c, const std::vector<Monomial>& basis) {
    const auto pts = evaluation_points(c);
    Matrix m;
    m.reserve(basis.size());
    for (const Monomial& mono : basis) {
        const auto f = TwoPointFunction::monomial(mono);
        Row row;
        row.reserve(pts.size());
        for (const Point& p : pts) row.push_back(c.evaluate(f, p));
        m.push_back(std::move(row));
    }
    return m;
}

LinearCode build_E(const HermitianCurve& c, int ell, int m) {
    if (ell < 0) throw Error(Errc::InvalidArgument, "ell must be nonnegative");
    require_m(c, m);
    const int n = static_cast<int>(evaluation_points(c).size());
    return LinearCode(c.field(), n, evaluation_matrix(c, c.riemann_roch_basis(ell, m)));
}

LinearCode build_C(const HermitianCurve& c, int ell, int m) { return build_E(c, ell, m).dual(); }

void for_each_codeword(const LinearCode& code, const std::function<void(const Row&)>& visit) {
    const std::uint64_t total = message_count(code);
    CodewordCursor cursor(code, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        visit(cursor.word());
        cursor.advance();
    }
}

std::optional<int> min_distance_bruteforce(const LinearCode& code) {
    if (code.dimension() == 0) return std::nullopt;
    const std::uint64_t total = message_count(code);
    std::atomic<int> best{code.length()};
    // Workers take contiguous message ranges; min is associative so the
    // result does not depend on the split.
    parallel_chunks(static_cast<std::size_t>(total - 1), [&](std::size_t begin, std::size_t end, unsigned) {
        CodewordCursor cursor(code, begin + 1);
        int local = code.length();
        for (std::size_t t = begin; t < end; ++t) {
            local = std::min(local, hamming_weight(cursor.word()));
            if (local <= 1) break;
            if (((t - begin) & 0xfff) == 0 && best.load(std::memory_order_relaxed) <= 1) break;
            cursor.advance();
        }
        int seen = best.load();
        while (local < seen && !best.compare_exchange_weak(seen, local)) {
        }
    });
    return best.load();
}

int saturation_index(const HermitianCurve& c, int m) {
    require_m(c, m);
    const int n = static_cast<int>(evaluation_points(c).size());
    const int cap = n + 2 * c.genus() + 1;
    for (int ell = 0; ell <= cap; ++ell) {
        if (build_E(c, ell, m).dimension() == n) return ell;
    }
    throw Error(Errc::SaturationNotReached, "E_ell^m did not reach full rank for ell <= " + std::to_string(cap));
}

SyndromeMatrix syndrome_matrix(const HermitianCurve& c, int m, const Row& y, int L) {
    require_m(c, m);
    const auto pts = evaluation_points(c);
    if (y.size() != pts.size()) throw Error(Errc::InvalidArgument, "word length differs from code length");
    if (L < 0) throw Error(Errc::InvalidArgument, "L must be nonnegative");
    const Field& f = c.field();
    SyndromeMatrix s;
    s.word = y;
    for (int t = 0; t <= L; ++t) {
        const auto ft = c.good_basis_function(t);
        Row h;
        h.reserve(pts.size());
        for (const Point& p : pts) h.push_back(c.evaluate(ft, p));
        s.h.push_back(std::move(h));
    }
    // Fold y into one side so each entry is a single dot product.
    Matrix hy = s.h;
    for (auto& row : hy)
        for (std::size_t k = 0; k < row.size(); ++k) row[k] = f.mul(row[k], y[k]);
    s.entries.assign(L + 1, Row(L + 1, f.zero()));
    for (int i = 0; i <= L; ++i) {
        for (int j = i; j <= L; ++j) {
            const Elem v = dot(f, s.h[i], hy[j]);
            s.entries[i][j] = v;
            s.entries[j][i] = v;
        }
    }
    return s;
}

int syndrome_rank(const Field& f, const SyndromeMatrix& s) { return rank(f, s.entries); }

LayerPatternReport verify_layer_pattern(const HermitianCurve& c, int ell, int m, const Row& y) {
    const LinearCode e_here = build_E(c, ell, m);
    const LinearCode e_next = build_E(c, ell + 1, m);
    if (!e_here.orthogonal_to(y) || e_next.orthogonal_to(y)) {
        throw Error(Errc::WordNotInLayer, "word is not in C_ell^m \\ C_(ell+1)^m");
    }
    const Field& f = c.field();
    const GoodBasisProfile profile = curve_profile(c);
    const NSet nset = n_set(profile, ell, m);
    const int L = std::max(saturation_index(c, m), ell + 1);
    const SyndromeMatrix s = syndrome_matrix(c, m, y, L);

    LayerPatternReport r;
    r.ell = ell;
    r.m = m;
    r.weight = hamming_weight(y);
    r.rank = syndrome_rank(f, s);
    r.n_set_size = nset.size();
    const auto& pairs = nset.pairs;
    for (std::size_t u = 0; u + 1 < pairs.size(); ++u) {
        if (!(pairs[u].first < pairs[u + 1].first && pairs[u].second > pairs[u + 1].second)) {
            r.indices_monotone = false;
            r.violations.push_back("N-set indices not monotone at position " + std::to_string(u));
        }
    }
    for (std::size_t u = 0; u < pairs.size(); ++u) {
        const auto [iu, ju] = pairs[u];
        if (s.entries[iu][ju].is_zero()) {
            r.nonzero_diagonal = false;
            r.violations.push_back("s(" + std::to_string(iu) + "," + std::to_string(ju) + ") is zero");
        }
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
            const int jv = pairs[v].second;
            if (!s.entries[iu][jv].is_zero()) {
                r.zeros_above = false;
                r.violations.push_back("s(" + std::to_string(iu) + "," + std::to_string(jv) + ") is nonzero");
            }
        }
    }
    Matrix minor;
    for (const auto& [iu, ju] : pairs) {
        Row row;
        for (const auto& col : pairs) row.push_back(s.entries[iu][col.second]);
        minor.push_back(std::move(row));
    }
    r.minor_nonsingular = rank(f, minor) == static_cast<int>(pairs.size());
    if (!r.minor_nonsingular) r.violations.push_back("N-set minor is singular");
    r.rank_bound = r.rank >= r.n_set_size;
    if (!r.rank_bound) r.violations.push_back("rank(S) < #N");
    r.weight_bound = r.weight >= r.rank;
    if (!r.weight_bound) r.violations.push_back("wt(y) < rank(S)");
    return r;
}

DistanceReport verify_distance(const HermitianCurve& c, int ell, int m) {
    const LinearCode e = build_E(c, ell, m);
    const LinearCode code = e.dual();
    const GoodBasisProfile profile = curve_profile(c);
    DistanceReport r;
    r.ell = ell;
    r.m = m;
    r.n = e.length();
    r.k_e = e.dimension();
    r.k_c = code.dimension();
    r.d_true = min_distance_bruteforce(code);
    r.d_nord = d_nord(profile, ell, m);
    r.d_goppa = d_goppa(ell, m, profile.genus());
    return r;
}

DimensionReport verify_dimension(const HermitianCurve& c, int ell, int m) {
    const LinearCode e = build_E(c, ell, m);
    DimensionReport r;
    r.dim_riemann_roch = c.riemann_roch_dimension(ell, m);
    r.dim_e = e.dimension();
    r.expected = ell + m + 1 - c.genus();
    r.applies = ell + m < e.length();
    return r;
}

SyndromeWeightReport verify_syndrome_weight(const HermitianCurve& c, int ell, int m) {
    const LinearCode code = build_C(c, ell, m);
    const int L = saturation_index(c, m);
    SyndromeWeightReport r;
    for_each_codeword(code, [&](const Row& y) {
        ++r.words_checked;
        if (r.counterexample) return;
        const auto s = syndrome_matrix(c, m, y, L);
        if (hamming_weight(y) < syndrome_rank(c.field(), s)) r.counterexample = y;
    });
    return r;
}

}  // namespace nord
