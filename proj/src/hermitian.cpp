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

#include "nord/hermitian.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "nord/error.hpp"

namespace nord {

namespace {

int floor_div(int a, int b) {
    int d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

int mod(int a, int b) { return ((a % b) + b) % b; }

void accumulate(const Field& f, std::map<Monomial, Elem>& terms, Monomial m, Elem c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second = f.add(it->second, c);
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

HermitianCurve HermitianCurve::make(int q) {
    std::uint32_t p = 0, e = 0;
    switch (q) {
        case 2: p = 2, e = 1; break;
        case 3: p = 3, e = 1; break;
        case 4: p = 2, e = 2; break;
        case 5: p = 5, e = 1; break;
        default: throw Error(Errc::UnsupportedQ, "q must be one of 2, 3, 4, 5 (got " + std::to_string(q) + ")");
    }
    HermitianCurve c(q, Field::make(p, 2 * e));
    const Field& f = c.field_;
    for (Elem x : f.elements()) {
        const Elem rhs = f.pow(x, q + 1);
        for (Elem y : f.elements()) {
            if (f.add(f.pow(y, q), y) == rhs) c.points_.push_back(Point{x, y});
        }
    }
    return c;
}

bool HermitianCurve::on_curve(Point p) const {
    return field_.add(field_.pow(p.y, q_), p.y) == field_.pow(p.x, q_ + 1);
}

Monomial HermitianCurve::monomial_with_pole_order(int w) const {
    const int a = mod(-w, q_ + 1);
    return Monomial{a, (w - a * q_) / (q_ + 1)};
}

Monomial HermitianCurve::monomial_with_valuation_zero(int v) const {
    const int a = mod(v, q_ + 1);
    return Monomial{a, (v - a) / (q_ + 1)};
}

TwoPointFunction HermitianCurve::term(Monomial m, Elem c) const {
    if (m.a < 0 || m.a > 2 * q_) throw Error(Errc::InvalidArgument, "x-exponent out of range");
    TwoPointFunction out;
    if (m.a <= q_) {
        accumulate(field_, out.terms_, m, c);
    } else {
        accumulate(field_, out.terms_, Monomial{m.a - q_ - 1, m.b + q_}, c);
        accumulate(field_, out.terms_, Monomial{m.a - q_ - 1, m.b + 1}, c);
    }
    return out;
}

TwoPointFunction HermitianCurve::add(const TwoPointFunction& f, const TwoPointFunction& g) const {
    TwoPointFunction out = f;
    for (const auto& [m, c] : g.terms_) accumulate(field_, out.terms_, m, c);
    return out;
}

TwoPointFunction HermitianCurve::sub(const TwoPointFunction& f, const TwoPointFunction& g) const {
    TwoPointFunction out = f;
    for (const auto& [m, c] : g.terms_) accumulate(field_, out.terms_, m, field_.neg(c));
    return out;
}

TwoPointFunction HermitianCurve::scale(Elem c, const TwoPointFunction& f) const {
    TwoPointFunction out;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : f.terms_) out.terms_.emplace(m, field_.mul(c, v));
    return out;
}

TwoPointFunction HermitianCurve::mul(const TwoPointFunction& f, const TwoPointFunction& g) const {
    TwoPointFunction out;
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            const Elem c = field_.mul(cf, cg);
            const int a = mf.a + mg.a, b = mf.b + mg.b;
            if (a <= q_) {
                accumulate(field_, out.terms_, Monomial{a, b}, c);
            } else {
                accumulate(field_, out.terms_, Monomial{a - q_ - 1, b + q_}, c);
                accumulate(field_, out.terms_, Monomial{a - q_ - 1, b + 1}, c);
            }
        }
    }
    return out;
}

ValuationPair HermitianCurve::valuations(const TwoPointFunction& f) const {
    if (f.is_zero()) throw Error(Errc::ZeroFunction, "the zero function has no valuation");
    ValuationPair v{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (const auto& [m, c] : f.terms_) {
        v.v_inf = std::min(v.v_inf, -pole_order_inf(m));
        v.v_zero = std::min(v.v_zero, valuation_zero(m));
    }
    return v;
}

Elem HermitianCurve::evaluate(const TwoPointFunction& f, Point p) const {
    Elem sum = field_.zero();
    for (const auto& [m, c] : f.terms_) {
        if (m.b < 0 && p.y.is_zero()) throw Error(Errc::PoleAtPoint, "y^b with b < 0 is undefined where y = 0");
        sum = field_.add(sum, field_.mul(c, field_.mul(field_.pow(p.x, m.a), field_.pow(p.y, m.b))));
    }
    return sum;
}

std::vector<Monomial> HermitianCurve::riemann_roch_basis(int ell, int m) const {
    std::vector<std::pair<int, Monomial>> keyed;
    for (int a = 0; a <= q_; ++a) {
        const int b_lo = ceil_div(-m - a, q_ + 1);
        const int b_hi = floor_div(ell - a * q_, q_ + 1);
        for (int b = b_lo; b <= b_hi; ++b) keyed.emplace_back(pole_order_inf({a, b}), Monomial{a, b});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Monomial> out;
    out.reserve(keyed.size());
    for (const auto& k : keyed) out.push_back(k.second);
    return out;
}

int HermitianCurve::riemann_roch_dimension(int ell, int m) const {
    int count = 0;
    for (int a = 0; a <= q_; ++a) {
        count += std::max(0, floor_div(ell - a * q_, q_ + 1) - ceil_div(-m - a, q_ + 1) + 1);
    }
    return count;
}

TwoPointSemigroup HermitianCurve::two_point_semigroup(int box) const {
    if (box < 2 * genus()) {
        throw Error(Errc::BoxTooSmall, "box " + std::to_string(box) + " < 2*genus = " + std::to_string(2 * genus()));
    }
    std::set<Pair> gaps;
    for (int alpha = 0; alpha <= box; ++alpha) {
        for (int beta = 0; beta <= box; ++beta) {
            const int d = riemann_roch_dimension(alpha, beta);
            // A space is never the union of two proper subspaces, so a function
            // with pole divisor exactly alpha*Q1 + beta*Q2 exists iff both jump.
            if (!(d > riemann_roch_dimension(alpha - 1, beta) && d > riemann_roch_dimension(alpha, beta - 1))) {
                gaps.insert(Pair{alpha, beta});
            }
        }
    }
    return TwoPointSemigroup::from_gaps(std::move(gaps));
}

TwoPointFunction HermitianCurve::good_basis_function(int i) const {
    if (i < 0) throw Error(Errc::InvalidArgument, "good basis index must be nonnegative");
    return TwoPointFunction::monomial(monomial_with_pole_order(i));
}

TwoPointFunction HermitianCurve::good_basis_g(int j) const {
    if (j < 1) throw Error(Errc::InvalidArgument, "g_j is defined for j >= 1");
    int seen = 0;
    for (int m = 1;; ++m) {
        const Monomial mono = monomial_with_valuation_zero(-m);
        if (pole_order_inf(mono) <= 0 && ++seen == j) return TwoPointFunction::monomial(mono);
    }
}

GoodBasisProfile HermitianCurve::profile_closed_form() const {
    std::map<int, int> entries;
    for (int i = 1; i <= 2 * genus() + q_; ++i) {
        const int sigma = std::max(0, -valuation_zero(monomial_with_pole_order(i)));
        if (sigma > 0) entries[i] = sigma;
    }
    return GoodBasisProfile::make(genus(), std::move(entries));
}

std::string HermitianCurve::format(const TwoPointFunction& f) const {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms_) {
        if (!first) os << '+';
        first = false;
        os << c.index << "*x^" << m.a << "*y^" << m.b;
    }
    return os.str();
}

TwoPointFunction HermitianCurve::parse(std::string_view text) const {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> TwoPointFunction {
        throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&](int& out) {
        skip_ws();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
        const std::size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos++] - '0');
            if (v > std::numeric_limits<int>::max()) return false;
        }
        if (pos == start) return false;
        out = static_cast<int>(negative ? -v : v);
        return true;
    };

    skip_ws();
    if (text.substr(pos) == "0") return {};
    TwoPointFunction out;
    while (true) {
        Elem coeff = field_.one();
        Monomial m{0, 0};
        bool any = false;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            const char ch = text[pos];
            if (ch == 'x' || ch == 'y') {
                ++pos;
                int e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    if (!read_int(e)) return fail("expected exponent");
                }
                (ch == 'x' ? m.a : m.b) += e;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                int c = 0;
                if (!read_int(c)) return fail("expected coefficient");
                if (c < 0 || static_cast<std::uint32_t>(c) >= field_.size()) return fail("coefficient out of range");
                coeff = field_.mul(coeff, Elem{static_cast<std::uint32_t>(c)});
            } else {
                return fail("unexpected character");
            }
            any = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) return fail("empty term");
        if (m.a < 0 || m.a > 2 * q_) return fail("x-exponent out of range");
        out = add(out, term(m, coeff));
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') return fail("expected '+'");
        ++pos;
    }
    return out;
}

}  // namespace nord
