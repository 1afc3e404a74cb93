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


// Randomized invariants. Every generator is seeded, so a failure reproduces
// exactly; the seed and case number are captured in the message.

#include <doctest.h>

#include <numeric>
#include <random>

#include "nord/bound.hpp"
#include "nord/codes.hpp"
#include "nord/error.hpp"
#include "nord/hermitian.hpp"
#include "nord/nweight.hpp"
#include "oracles.hpp"

using nord::Elem;
using nord::Field;

namespace {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return range(0, 1) == 1; }
    Elem elem(const Field& f) { return Elem{static_cast<std::uint32_t>(range(0, f.size() - 1))}; }
    Elem nonzero(const Field& f) { return Elem{static_cast<std::uint32_t>(range(1, f.size() - 1))}; }

    nord::TwoPointFunction function(const nord::HermitianCurve& c, int terms, int bmin, int bmax) {
        nord::TwoPointFunction f;
        for (int i = 0; i < terms; ++i)
            f = c.add(f, c.term({range(0, c.q()), range(bmin, bmax)}, nonzero(c.field())));
        return f;
    }

    nord::Row word(const Field& f, int n) {
        nord::Row r(n);
        for (auto& e : r) e = elem(f);
        return r;
    }

    // Random element of the row space.
    nord::Row codeword(const nord::LinearCode& code) {
        nord::Row y(code.length(), Elem{0});
        for (const auto& g : code.generator()) {
            const Elem a = elem(code.field());
            for (int i = 0; i < code.length(); ++i) y[i] = code.field().add(y[i], code.field().mul(a, g[i]));
        }
        return y;
    }

private:
    std::mt19937_64 rng_;
};

constexpr int kCases = 200;

}  // namespace

TEST_CASE("field axioms") {
    Gen g(0xF1E1D);
    for (auto [p, k] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 5u}, {5u, 3u}, {3u, 7u}}) {
        const Field f = Field::make(p, k);
        for (int i = 0; i < kCases; ++i) {
            const Elem a = g.elem(f), b = g.elem(f), c = g.elem(f);
            CAPTURE(f.describe());
            CAPTURE(i);
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.add(a, f.neg(a)) == f.zero());
            REQUIRE(f.sub(f.add(a, b), b) == a);
            REQUIRE(f.mul(a, b).index == oracle::field_mul(a.index, b.index, p, f.modulus()));
            if (!b.is_zero()) REQUIRE(f.mul(f.div(a, b), b) == a);
            REQUIRE(f.pow(a, f.size()) == a);
        }
    }
}

TEST_CASE("semigroups from random generators") {
    Gen g(0x5E31);
    for (int i = 0; i < kCases; ++i) {
        std::vector<int> gens;
        const int count = g.range(1, 4);
        for (int j = 0; j < count; ++j) gens.push_back(g.range(2, 11));
        int d = 0;
        for (int x : gens) d = std::gcd(d, x);
        CAPTURE(i);
        if (d != 1) {
            CHECK_THROWS_AS(nord::NumericalSemigroup::from_generators(gens), nord::Error);
            continue;
        }
        const auto s = nord::NumericalSemigroup::from_generators(gens);
        REQUIRE(s.gaps() == oracle::gaps_by_reachability(gens, 150));
        REQUIRE(nord::NumericalSemigroup::from_gaps(s.gaps()) == s);
        for (int j = 0; j < 10; ++j) REQUIRE(s.contains(s.nth_nongap(j)));
        for (int j = 1; j < 10; ++j) REQUIRE(s.nth_nongap(j) > s.nth_nongap(j - 1));
    }
}

TEST_CASE("bound engine invariants") {
    Gen g(0xB0B);
    std::vector<nord::GoodBasisProfile> profiles{nord::HermitianCurve::make(2).profile_closed_form(),
                                                 nord::HermitianCurve::make(3).profile_closed_form(),
                                                 nord::HermitianCurve::make(4).profile_closed_form()};
    profiles.push_back(nord::GoodBasisProfile{});
    for (int gamma = 1; gamma <= 6; ++gamma) profiles.push_back(nord::hyperelliptic_profile(gamma));
    for (int i = 0; i < kCases; ++i) {
        const auto& p = profiles[g.range(0, static_cast<int>(profiles.size()) - 1)];
        const int gamma = p.genus();
        const int m = g.range(p.lambda_sigma(), 2 * p.lambda_sigma() + 3);
        const int ell = g.range(0, 25);
        CAPTURE(i);
        const int dn = nord::d_nord(p, ell, m);
        REQUIRE(dn == oracle::d_nord(p.entries(), gamma, ell, m));
        if (ell >= gamma) REQUIRE(dn >= ell - gamma + 1);
        if (m >= 2 * p.lambda_sigma()) REQUIRE(dn == ell + 2);
        // Raising m can only add pairs.
        const auto lo = nord::n_set(p, ell, m), hi = nord::n_set(p, ell, m + 1);
        for (const auto& pr : lo.pairs) REQUIRE(std::find(hi.pairs.begin(), hi.pairs.end(), pr) != hi.pairs.end());
        REQUIRE(nord::abc_decomposition(p, ell, m).total() == lo.size());
        REQUIRE(nord::delta(p, ell, m) == dn - nord::d_goppa(ell, m, gamma));
    }
}

TEST_CASE("tables equal pointwise queries") {
    const auto p = nord::HermitianCurve::make(3).profile_closed_form();
    const auto rows = nord::bound_table(p, {0, 12}, {5, 11});
    std::size_t k = 0;
    for (int ell = 0; ell <= 12; ++ell)
        for (int m = 5; m <= 11; ++m, ++k) {
            REQUIRE(rows[k].ell == ell);
            REQUIRE(rows[k].m == m);
            REQUIRE(rows[k].d_nord == nord::d_nord(p, ell, m));
            REQUIRE(rows[k].n_set_size == nord::n_set(p, ell, m).size());
        }
}

TEST_CASE("curve arithmetic is a homomorphism to point values") {
    Gen g(0xC0DE);
    for (int q : {2, 3}) {
        const auto c = nord::HermitianCurve::make(q);
        const auto& f = c.field();
        const auto pts = nord::evaluation_points(c);
        for (int i = 0; i < kCases / 2; ++i) {
            const auto a = g.function(c, g.range(1, 4), -3, 4);
            const auto b = g.function(c, g.range(1, 4), -3, 4);
            CAPTURE(q);
            CAPTURE(c.format(a));
            CAPTURE(c.format(b));
            const auto prod = c.mul(a, b);
            const auto sum = c.add(a, b);
            for (int t = 0; t < 5; ++t) {
                const auto pt = pts[g.range(0, static_cast<int>(pts.size()) - 1)];
                if (pt.y.is_zero()) continue;
                REQUIRE(c.evaluate(prod, pt) == f.mul(c.evaluate(a, pt), c.evaluate(b, pt)));
                REQUIRE(c.evaluate(sum, pt) == f.add(c.evaluate(a, pt), c.evaluate(b, pt)));
            }
            if (a.is_zero() || b.is_zero()) continue;
            const auto va = c.valuations(a), vb = c.valuations(b), vp = c.valuations(prod);
            REQUIRE(vp.v_inf == va.v_inf + vb.v_inf);
            REQUIRE(vp.v_zero == va.v_zero + vb.v_zero);
            if (!sum.is_zero()) {
                REQUIRE(c.valuations(sum).v_inf >= std::min(va.v_inf, vb.v_inf));
                REQUIRE(c.valuations(sum).v_zero >= std::min(va.v_zero, vb.v_zero));
            }
        }
    }
}

TEST_CASE("monomials evaluate like the oracle") {
    Gen g(0xE7A1);
    const auto c = nord::HermitianCurve::make(3);
    for (int i = 0; i < kCases; ++i) {
        const nord::Monomial mono{g.range(0, 3), g.range(-4, 4)};
        for (const auto& pt : nord::evaluation_points(c)) {
            if (pt.y.is_zero() && mono.b < 0) continue;
            REQUIRE(c.evaluate(c.term(mono, Elem{1}), pt) == oracle::eval_monomial(c.field(), mono, pt));
        }
    }
}

TEST_CASE("codes: duality, nesting, syndrome rank") {
    Gen g(0xD0A1);
    const auto c = nord::HermitianCurve::make(2);
    for (int m = 1; m <= 3; ++m)
        for (int ell = 0; ell <= 8; ++ell) {
            const auto e = nord::build_E(c, ell, m), next = nord::build_E(c, ell + 1, m);
            const auto cc = nord::build_C(c, ell, m);
            REQUIRE(e.dimension() + cc.dimension() == 7);
            REQUIRE(cc == e.dual());
            for (const auto& row : e.generator()) REQUIRE(next.contains(row));
            if (ell + m < 7) REQUIRE(e.dimension() == ell + m + 1 - c.genus());
            for (int t = 0; t < 10; ++t) {
                const auto y = g.codeword(cc);
                REQUIRE(cc.contains(y));
                REQUIRE(e.orthogonal_to(y));
                const auto s = nord::syndrome_matrix(c, m, y, g.range(0, 8));
                REQUIRE(nord::syndrome_rank(c.field(), s) <= nord::hamming_weight(y));
            }
        }
}

TEST_CASE("linear algebra") {
    Gen g(0x11A1);
    const Field f = Field::make(3, 2);
    for (int i = 0; i < 60; ++i) {
        const int rows = g.range(1, 4), cols = g.range(1, 6);
        nord::Matrix a;
        for (int r = 0; r < rows; ++r) a.push_back(g.word(f, cols));
        const int rk = nord::rank(f, a);
        REQUIRE(rk == oracle::rank_by_span(f, a));
        const auto ns = nord::nullspace(f, a, cols);
        REQUIRE(static_cast<int>(ns.size()) == cols - rk);
        for (const auto& v : ns)
            for (const auto& r : a) REQUIRE(nord::dot(f, r, v) == Elem{0});
        const auto red = nord::rref(f, a);
        for (const auto& r : a) REQUIRE(nord::in_row_space(f, red, r));
    }
}

TEST_CASE("model arithmetic") {
    Gen g(0x3A7);
    const auto c = nord::HermitianCurve::make(2);
    const auto cm = nord::model_curve(c, nord::CurveSide::Rho);
    const auto lm = nord::model_laurent(Field::make(3, 1));
    for (int i = 0; i < kCases; ++i) {
        const auto a = g.function(c, g.range(0, 3), -2, 2);
        const auto b = g.function(c, g.range(0, 3), -2, 2);
        const auto da = nord::curve_to_dense(c, a), db = nord::curve_to_dense(c, b);
        REQUIRE(nord::curve_from_dense(c, da) == a);
        REQUIRE(nord::curve_from_dense(c, cm->mul(da, db)) == c.mul(a, b));
        REQUIRE(nord::curve_from_dense(c, cm->add(da, db)) == c.add(a, b));
        if (!a.is_zero()) REQUIRE(cm->weight(da) == c.valuations(a).rho());
    }
    const auto s = lm->sample(1, 1000);
    for (int i = 0; i < kCases; ++i) {
        const auto& a = s[g.range(0, static_cast<int>(s.size()) - 1)];
        const auto& b = s[g.range(0, static_cast<int>(s.size()) - 1)];
        const auto& d = s[g.range(0, static_cast<int>(s.size()) - 1)];
        REQUIRE(lm->mul(a, b) == lm->mul(b, a));
        REQUIRE(lm->mul(lm->mul(a, b), d) == lm->mul(a, lm->mul(b, d)));
        REQUIRE(lm->mul(a, lm->add(b, d)) == lm->add(lm->mul(a, b), lm->mul(a, d)));
    }
}
