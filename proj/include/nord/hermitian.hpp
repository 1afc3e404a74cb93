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

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nord/finite_field.hpp"
#include "nord/semigroup.hpp"

namespace nord {

/// x^a y^b with 0 <= a <= q once reduced; b may be negative.
struct Monomial {
    int a = 0;
    int b = 0;
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Point {
    Elem x;
    Elem y;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Element of F[x, y, 1/y] / (y^q + y - x^(q+1)): the functions regular away
/// from the point at infinity and (0,0). Terms are kept reduced, with no zero
/// coefficients.
class TwoPointFunction {
public:
    TwoPointFunction() = default;
    static TwoPointFunction monomial(Monomial m, Elem c = Elem{1}) {
        TwoPointFunction f;
        if (!c.is_zero()) f.terms_.emplace(m, c);
        return f;
    }

    const std::map<Monomial, Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const TwoPointFunction&, const TwoPointFunction&) = default;

private:
    friend class HermitianCurve;
    std::map<Monomial, Elem> terms_;
};

/// Valuations at Q1 (infinity) and Q2 = (0,0) with the clipped pole orders.
struct ValuationPair {
    int v_inf = 0;
    int v_zero = 0;
    int rho() const { return std::max(0, -v_inf); }
    int sigma() const { return std::max(0, -v_zero); }
    friend bool operator==(const ValuationPair&, const ValuationPair&) = default;
};

/// The Hermitian curve y^q + y = x^(q+1) over GF(q^2), q in {2,3,4,5}, with
/// Q1 the point at infinity and Q2 = (0,0).
class HermitianCurve {
public:
    static HermitianCurve make(int q);

    int q() const { return q_; }
    const Field& field() const { return field_; }
    int genus() const { return q_ * (q_ - 1) / 2; }
    /// All q^3 affine rational points, lexicographic by (x, y) index.
    const std::vector<Point>& points() const { return points_; }
    bool on_curve(Point p) const;

    /// Pole order at infinity, aq + b(q+1). Injective on reduced monomials.
    int pole_order_inf(Monomial m) const { return m.a * q_ + m.b * (q_ + 1); }
    /// Valuation at (0,0), a + b(q+1). Injective on reduced monomials.
    int valuation_zero(Monomial m) const { return m.a + m.b * (q_ + 1); }
    /// The reduced monomial with pole order w at infinity.
    Monomial monomial_with_pole_order(int w) const;
    /// The reduced monomial with valuation v at (0,0).
    Monomial monomial_with_valuation_zero(int v) const;

    /// Builds c*x^a*y^b, rewriting x^(q+1) = y^q + y when a > q.
    TwoPointFunction term(Monomial m, Elem c) const;
    TwoPointFunction add(const TwoPointFunction& f, const TwoPointFunction& g) const;
    TwoPointFunction sub(const TwoPointFunction& f, const TwoPointFunction& g) const;
    TwoPointFunction scale(Elem c, const TwoPointFunction& f) const;
    TwoPointFunction mul(const TwoPointFunction& f, const TwoPointFunction& g) const;

    ValuationPair valuations(const TwoPointFunction& f) const;
    Elem evaluate(const TwoPointFunction& f, Point p) const;

    /// Monomial basis of L(ell*Q1 + m*Q2), ordered by pole order at infinity.
    /// Negative arguments are allowed and give the (possibly empty) basis of
    /// the corresponding divisor.
    std::vector<Monomial> riemann_roch_basis(int ell, int m) const;
    int riemann_roch_dimension(int ell, int m) const;

    /// Gap set over [0, box]^2 by the dimension-jump criterion.
    TwoPointSemigroup two_point_semigroup(int box) const;
    TwoPointSemigroup two_point_semigroup() const { return two_point_semigroup(2 * genus()); }

    /// f_i: the reduced monomial of pole order i at infinity; sigma(f_i) is
    /// minimal among functions with rho = i.
    TwoPointFunction good_basis_function(int i) const;
    /// g_j (j >= 1): regular at infinity with pole order m_j at (0,0).
    TwoPointFunction good_basis_g(int j) const;
    /// i -> sigma(f_i) read off the monomials f_i.
    GoodBasisProfile profile_closed_form() const;

    /// "c*x^a*y^b" terms joined by "+"; "0" for the zero function.
    std::string format(const TwoPointFunction& f) const;
    TwoPointFunction parse(std::string_view text) const;

private:
    HermitianCurve(int q, Field field) : q_(q), field_(std::move(field)) {}

    int q_ = 0;
    Field field_;
    std::vector<Point> points_;
};

}  // namespace nord
