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


#include <doctest.h>

#include "nord/bound.hpp"
#include "nord/codes.hpp"
#include "nord/error.hpp"
#include "oracles.hpp"

using nord::Elem;
using nord::HermitianCurve;

TEST_CASE("evaluation points") {
    CHECK(nord::evaluation_points(HermitianCurve::make(2)).size() == 7);
    const auto pts = nord::evaluation_points(HermitianCurve::make(3));
    CHECK(pts.size() == 26);
    CHECK(std::find(pts.begin(), pts.end(), nord::Point{Elem{0}, Elem{0}}) == pts.end());
    CHECK(std::is_sorted(pts.begin(), pts.end()));
}

TEST_CASE("E and C for q = 2") {
    const auto c = HermitianCurve::make(2);
    const auto e21 = nord::build_E(c, 2, 1);
    CHECK(e21.length() == 7);
    CHECK(e21.dimension() == 3);
    const auto mat = nord::evaluation_matrix(c, c.riemann_roch_basis(2, 1));
    CHECK(mat[0] == nord::Row(7, Elem{1}));
    CHECK(nord::build_E(c, 3, 2).dimension() == 5);
    CHECK(nord::build_E(c, 0, 1).dimension() == 1);
    CHECK(nord::build_C(c, 2, 1).dimension() == 4);
    CHECK(nord::build_C(c, 3, 2).dimension() == 2);
    CHECK_THROWS_AS(nord::build_E(HermitianCurve::make(3), 2, 4), nord::Error);
}

TEST_CASE("duality against the oracle") {
    const auto c = HermitianCurve::make(2);
    for (int m = 1; m <= 3; ++m)
        for (int ell = 0; ell + m <= 6; ++ell) {
            const auto e = nord::build_E(c, ell, m);
            const auto cc = nord::build_C(c, ell, m);
            const auto eval = nord::evaluation_matrix(c, c.riemann_roch_basis(ell, m));
            REQUIRE(e.dimension() == oracle::rank_by_span(c.field(), eval));
            REQUIRE(e.dimension() + cc.dimension() == 7);
            for (const auto& a : e.generator())
                for (const auto& b : cc.generator()) REQUIRE(nord::dot(c.field(), a, b) == Elem{0});
        }
}

TEST_CASE("brute-force distance") {
    const auto f = nord::Field::make(2, 2);
    const nord::LinearCode rep(f, 7, {nord::Row(7, Elem{1})});
    CHECK(nord::min_distance_bruteforce(rep) == 7);
    const nord::LinearCode zero(f, 7, {});
    CHECK_FALSE(nord::min_distance_bruteforce(zero).has_value());

    const auto c = HermitianCurve::make(2);
    const auto c21 = nord::build_C(c, 2, 1);
    const auto d = nord::min_distance_bruteforce(c21);
    REQUIRE(d.has_value());
    CHECK(*d >= 3);
    const auto words = oracle::dual_words(f, nord::build_E(c, 2, 1).generator(), 7);
    CHECK(words.size() == 256);
    CHECK(d == oracle::min_nonzero_weight(words));
}

TEST_CASE("search cap") {
    const auto f = nord::Field::make(2, 2);
    nord::Matrix id;
    for (int i = 0; i < 13; ++i) {
        nord::Row r(13, Elem{0});
        r[i] = Elem{1};
        id.push_back(r);
    }
    try {
        nord::min_distance_bruteforce(nord::LinearCode(f, 13, id));
        FAIL("searched 4^13 words");
    } catch (const nord::Error& e) {
        CHECK(e.code() == nord::Errc::SearchTooLarge);
    }
}

TEST_CASE("saturation") {
    const auto c = HermitianCurve::make(2);
    // Smallest ell with rank 7, found by the span oracle.
    for (int m = 1; m <= 3; ++m) {
        int expected = 0;
        while (oracle::rank_by_span(c.field(), nord::evaluation_matrix(c, c.riemann_roch_basis(expected, m))) < 7)
            ++expected;
        CHECK(nord::saturation_index(c, m) == expected);
    }
    CHECK(nord::saturation_index(c, 1) == 6);
    CHECK(nord::saturation_index(c, 2) <= nord::saturation_index(c, 1));
    CHECK(nord::saturation_index(c, 3) <= nord::saturation_index(c, 2));
    int prev = 0;
    for (int ell = 0; ell <= 8; ++ell) {
        const int k = nord::build_E(c, ell, 1).dimension();
        CHECK(k >= prev);
        prev = k;
    }
}

TEST_CASE("syndrome matrices") {
    const auto c = HermitianCurve::make(2);
    const auto& f = c.field();
    const nord::Row zero(7, Elem{0});
    const auto s0 = nord::syndrome_matrix(c, 1, zero, 6);
    CHECK(s0.size() == 7);
    CHECK(nord::syndrome_rank(f, s0) == 0);
    nord::Row e1 = zero;
    e1[3] = Elem{2};
    CHECK(nord::syndrome_rank(f, nord::syndrome_matrix(c, 1, e1, 6)) <= 1);

    // Entries straight from the definition s_ij = sum_k f_i(P_k) f_j(P_k) y_k.
    const auto pts = nord::evaluation_points(c);
    nord::Row y = zero;
    y[0] = Elem{1}, y[2] = Elem{3}, y[5] = Elem{2};
    const auto s = nord::syndrome_matrix(c, 1, y, 4);
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            Elem v{0};
            for (std::size_t k = 0; k < pts.size(); ++k) {
                const Elem fi = c.evaluate(c.good_basis_function(i), pts[k]);
                const Elem fj = c.evaluate(c.good_basis_function(j), pts[k]);
                v = f.add(v, f.mul(f.mul(fi, fj), y[k]));
            }
            CHECK(s.entries[i][j] == v);
        }
}

TEST_CASE("layer pattern") {
    const auto c = HermitianCurve::make(2);
    const auto c11 = nord::build_C(c, 1, 1);
    const auto c21 = nord::build_C(c, 2, 1);
    int layer_words = 0;
    nord::for_each_codeword(c11, [&](const nord::Row& y) {
        if (c21.contains(y)) return;
        ++layer_words;
        const auto r = nord::verify_layer_pattern(c, 1, 1, y);
        CHECK(r.pass());
    });
    CHECK(layer_words == 1024 - 256);
    try {
        nord::verify_layer_pattern(c, 1, 1, c21.generator()[0]);
        FAIL("accepted a word of the next layer");
    } catch (const nord::Error& e) {
        CHECK(e.code() == nord::Errc::WordNotInLayer);
    }
}

TEST_CASE("distance reports") {
    const auto c = HermitianCurve::make(2);
    const auto r21 = nord::verify_distance(c, 2, 1);
    CHECK(r21.pass());
    CHECK(*r21.d_true >= 3);
    const auto r32 = nord::verify_distance(c, 3, 2);
    CHECK(r32.d_nord == 5);
    CHECK(*r32.d_true >= 5);
    const auto r01 = nord::verify_distance(c, 0, 1);
    CHECK(r01.d_nord == 2);
    CHECK(*r01.d_true >= 2);
    CHECK(nord::verify_dimension(c, 2, 1).pass());
    CHECK(nord::verify_syndrome_weight(c, 2, 1).pass());
}
