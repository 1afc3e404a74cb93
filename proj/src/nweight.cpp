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

#include "nord/nweight.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "nord/error.hpp"
#include "nord/parallel.hpp"

namespace nord {

std::string weight_string(Weight w) { return w == kNegInf ? "-inf" : std::to_string(w); }

// ---------------------------------------------------------------- DensePoly

DensePoly DensePoly::monomial(int exponent, Elem c) {
    DensePoly p;
    if (c.is_zero()) return p;
    p.lo_ = exponent;
    p.len_ = 1;
    p.c_[0] = static_cast<std::uint16_t>(c.index);
    return p;
}

DensePoly DensePoly::from_coefficients(int lo, const Elem* coeffs, int count) {
    int first = 0, last = count - 1;
    while (first < count && coeffs[first].is_zero()) ++first;
    while (last >= first && coeffs[last].is_zero()) --last;
    DensePoly p;
    if (first > last) return p;
    if (last - first + 1 > kCapacity) {
        throw Error(Errc::InvalidArgument, "element spans more than " + std::to_string(kCapacity) + " exponents");
    }
    p.lo_ = lo + first;
    p.len_ = last - first + 1;
    for (int i = 0; i < p.len_; ++i) p.c_[i] = static_cast<std::uint16_t>(coeffs[first + i].index);
    return p;
}

int DensePoly::terms() const {
    int n = 0;
    for (int i = 0; i < len_; ++i) n += c_[i] != 0;
    return n;
}

Elem DensePoly::coeff(int exponent) const {
    const int i = exponent - lo_;
    if (len_ == 0 || i < 0 || i >= len_) return Elem{0};
    return Elem{c_[i]};
}

template <class Op>
DensePoly DensePoly::combine(const DensePoly& a, const DensePoly& b, Op op) {
    const int lo = std::min(a.lo_, b.lo_);
    const int n = std::max(a.hi(), b.hi()) - lo + 1;
    if (n > 2 * kCapacity) throw Error(Errc::InvalidArgument, "exponent window too wide");
    std::array<std::uint16_t, 2 * kCapacity> buf;
    std::fill_n(buf.begin(), n, std::uint16_t{0});
    std::copy_n(a.c_.begin(), a.len_, buf.begin() + (a.lo_ - lo));
    std::uint16_t* dst = buf.data() + (b.lo_ - lo);
    for (int i = 0; i < b.len_; ++i) dst[i] = static_cast<std::uint16_t>(op(Elem{dst[i]}, Elem{b.c_[i]}).index);
    int first = 0, last = n - 1;
    while (first < n && buf[first] == 0) ++first;
    while (last >= first && buf[last] == 0) --last;
    DensePoly p;
    if (first > last) return p;
    if (last - first + 1 > kCapacity) throw Error(Errc::InvalidArgument, "element spans too many exponents");
    p.lo_ = lo + first;
    p.len_ = last - first + 1;
    std::copy_n(buf.begin() + first, p.len_, p.c_.begin());
    return p;
}

DensePoly DensePoly::add(const Field& f, const DensePoly& a, const DensePoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (f.characteristic() == 2) return combine(a, b, [](Elem x, Elem y) { return Elem{x.index ^ y.index}; });
    return combine(a, b, [&](Elem x, Elem y) { return f.add(x, y); });
}

DensePoly DensePoly::sub(const Field& f, const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return scale(f, f.neg(f.one()), b);
    if (f.characteristic() == 2) return combine(a, b, [](Elem x, Elem y) { return Elem{x.index ^ y.index}; });
    return combine(a, b, [&](Elem x, Elem y) { return f.sub(x, y); });
}

DensePoly DensePoly::scale(const Field& f, Elem c, const DensePoly& a) {
    if (c.is_zero() || a.is_zero()) return {};
    DensePoly out = a;
    for (int i = 0; i < out.len_; ++i) out.c_[i] = static_cast<std::uint16_t>(f.mul(c, Elem{a.c_[i]}).index);
    return out;
}

// ------------------------------------------------------------------- models

namespace {

int mod(int a, int b) { return ((a % b) + b) % b; }

/// Product coefficients; buf[k] holds exponent lo + k.
struct Accumulator {
    int lo = 0;
    std::array<Elem, 3 * DensePoly::kCapacity> buf{};

    DensePoly finish(int hi) const { return DensePoly::from_coefficients(lo, buf.data(), hi - lo + 1); }
};

DensePoly convolve(const Field& f, const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Accumulator acc;
    acc.lo = a.lo() + b.lo();
    const std::uint16_t* ac = a.data();
    const std::uint16_t* bc = b.data();
    for (int i = 0; i < a.length(); ++i) {
        if (ac[i] == 0) continue;
        for (int j = 0; j < b.length(); ++j)
            if (bc[j] != 0) acc.buf[i + j] = f.add(acc.buf[i + j], f.mul(Elem{ac[i]}, Elem{bc[j]}));
    }
    return acc.finish(a.hi() + b.hi());
}

std::string join_terms(const DensePoly& a, const std::function<std::string(int)>& mono) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int e = a.lo(); e <= a.hi(); ++e) {
        const Elem c = a.coeff(e);
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        const std::string m = mono(e);
        out += std::to_string(c.index);
        if (!m.empty()) out += "*" + m;
    }
    return out;
}

std::uint64_t checked_power(std::uint64_t base, int exp, std::size_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < exp; ++i) {
        total *= base;
        if (total > cap) {
            throw Error(Errc::SampleTooLarge, std::to_string(base) + "^" + std::to_string(exp) +
                                                  " elements exceed the sample cap " + std::to_string(cap));
        }
    }
    return total;
}

/// Every coefficient vector over exponents [lo, lo + width), in index order
/// with the lowest exponent as the fastest digit.
std::vector<DensePoly> all_vectors(const Field& f, int lo, int width, std::size_t cap) {
    const std::uint64_t total = checked_power(f.size(), width, cap);
    std::vector<DensePoly> out;
    out.reserve(total);
    std::vector<Elem> digits(width, f.zero());
    for (std::uint64_t t = 0; t < total; ++t) {
        out.push_back(DensePoly::from_coefficients(lo, digits.data(), width));
        for (int i = 0; i < width; ++i) {
            digits[i].index = (digits[i].index + 1) % f.size();
            if (digits[i].index != 0) break;
        }
    }
    return out;
}

class PolyModel : public NWeightModel {
public:
    using NWeightModel::NWeightModel;

    DensePoly mul(const DensePoly& a, const DensePoly& b) const override { return convolve(field(), a, b); }
    std::vector<DensePoly> sample(int bound, std::size_t max_size) const override {
        if (bound < 0) throw Error(Errc::InvalidArgument, "sample bound must be nonnegative");
        return all_vectors(field(), 0, bound + 1, max_size);
    }
    std::string describe_sample(int bound) const override {
        return "all f in " + field().describe() + "[t] with deg f <= " + std::to_string(bound);
    }
    std::string format(const DensePoly& a) const override {
        return join_terms(a, [](int e) { return e == 0 ? std::string() : "t^" + std::to_string(e); });
    }
};

class ConstantModel final : public PolyModel {
public:
    ConstantModel(Field f, int c) : PolyModel(std::move(f)), c_(c) {
        if (c < 0) throw Error(Errc::InvalidArgument, "constant value must be nonnegative");
    }
    std::string name() const override { return "constant(c=" + std::to_string(c_) + ")"; }
    ModelClaims claims() const override { return {true, false, false}; }
    Weight weight(const DensePoly& a) const override { return a.is_zero() ? kNegInf : c_; }

private:
    int c_;
};

class IdealModel final : public PolyModel {
public:
    IdealModel(Field f, std::vector<Elem> g) : PolyModel(std::move(f)) {
        while (!g.empty() && g.back().is_zero()) g.pop_back();
        if (g.size() < 2) throw Error(Errc::GIsConstant, "g must have positive degree");
        for (Elem e : g)
            if (!field().contains(e)) throw Error(Errc::InvalidArgument, "coefficient of g outside the field");
        g_ = std::move(g);
        lead_inv_ = field().inv(g_.back());
    }
    std::string name() const override {
        return "ideal(g=" + format(DensePoly::from_coefficients(0, g_.data(), static_cast<int>(g_.size()))) + ")";
    }
    ModelClaims claims() const override { return {true, false, false}; }
    Weight weight(const DensePoly& a) const override {
        if (a.is_zero()) return kNegInf;
        return divides(a) ? 0 : 1;
    }

private:
    bool divides(const DensePoly& a) const {
        const Field& f = field();
        std::vector<Elem> r(a.hi() + 1, f.zero());
        for (int e = a.lo(); e <= a.hi(); ++e) r[e] = a.coeff(e);
        const int dg = static_cast<int>(g_.size()) - 1;
        for (int top = static_cast<int>(r.size()) - 1; top >= dg; --top) {
            if (r[top].is_zero()) continue;
            const Elem factor = f.mul(r[top], lead_inv_);
            for (int i = 0; i <= dg; ++i) r[top - dg + i] = f.sub(r[top - dg + i], f.mul(factor, g_[i]));
        }
        return std::all_of(r.begin(), r.end(), [](Elem e) { return e.is_zero(); });
    }

    std::vector<Elem> g_;
    Elem lead_inv_;
};

// Exponent e stands for x^e when e > 0 and y^(-e) when e < 0.
class LaurentModel final : public NWeightModel {
public:
    using NWeightModel::NWeightModel;

    std::string name() const override { return "laurent"; }
    ModelClaims claims() const override { return {true, true, false}; }
    DensePoly mul(const DensePoly& a, const DensePoly& b) const override { return convolve(field(), a, b); }
    Weight weight(const DensePoly& a) const override {
        if (a.is_zero()) return kNegInf;
        return std::max(0, -a.lo());
    }
    std::vector<DensePoly> sample(int bound, std::size_t max_size) const override {
        if (bound < 0) throw Error(Errc::InvalidArgument, "sample bound must be nonnegative");
        return all_vectors(field(), -bound, 2 * bound + 1, max_size);
    }
    std::string describe_sample(int bound) const override {
        return "all f1(x)+f2(y) over " + field().describe() + " with deg f1, deg f2 <= " + std::to_string(bound);
    }
    std::string format(const DensePoly& a) const override {
        return join_terms(a, [](int e) {
            if (e == 0) return std::string();
            return (e > 0 ? "x^" : "y^") + std::to_string(std::abs(e));
        });
    }
};

class CurveModel final : public NWeightModel {
public:
    CurveModel(HermitianCurve c, CurveSide side) : NWeightModel(c.field()), curve_(std::move(c)), side_(side) {}

    std::string name() const override {
        return std::string("curve-") + (side_ == CurveSide::Rho ? "rho" : "sigma") + "(q=" + std::to_string(curve_.q()) +
               ")";
    }
    ModelClaims claims() const override { return {true, true, false}; }

    DensePoly mul(const DensePoly& a, const DensePoly& b) const override {
        if (a.is_zero() || b.is_zero()) return {};
        const Field& f = field();
        const int q = curve_.q();
        const int drop = q * q - 1;
        Accumulator acc;
        acc.lo = a.lo() + b.lo() - drop;
        const std::uint16_t* ac = a.data();
        const std::uint16_t* bc = b.data();
        for (int i = 0; i < a.length(); ++i) {
            if (ac[i] == 0) continue;
            const int xa = x_exponent(a.lo() + i);
            for (int j = 0; j < b.length(); ++j) {
                if (bc[j] == 0) continue;
                const Elem c = f.mul(Elem{ac[i]}, Elem{bc[j]});
                acc.buf[i + j + drop] = f.add(acc.buf[i + j + drop], c);
                // x^(q+1) = y^q + y: the y term sits q^2 - 1 lower.
                if (xa + x_exponent(b.lo() + j) > q) acc.buf[i + j] = f.add(acc.buf[i + j], c);
            }
        }
        return acc.finish(a.hi() + b.hi());
    }

    Weight weight(const DensePoly& a) const override {
        if (a.is_zero()) return kNegInf;
        if (side_ == CurveSide::Rho) return std::max(0, a.hi());
        int v = INT_MAX;
        for (int w = a.lo(); w <= a.hi(); ++w)
            if (!a.coeff(w).is_zero()) v = std::min(v, w - x_exponent(w) * (curve_.q() - 1));
        return std::max(0, -v);
    }

    std::vector<DensePoly> sample(int bound, std::size_t max_size) const override;

    std::string describe_sample(int bound) const override {
        return "functions on the basis of R_" + std::to_string(bound) + "^" + std::to_string(bound) +
               " with at most 3 terms (any coefficients) or any support (prime-field coefficients)";
    }

    std::string format(const DensePoly& a) const override { return curve_.format(curve_from_dense(curve_, a)); }

private:
    int x_exponent(int w) const { return mod(-w, curve_.q() + 1); }

    HermitianCurve curve_;
    CurveSide side_;
};

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<DensePoly> CurveModel::sample(int bound, std::size_t max_size) const {
    if (bound < 0) throw Error(Errc::InvalidArgument, "sample bound must be nonnegative");
    const Field& f = field();
    std::vector<int> ws;
    for (const Monomial& m : curve_.riemann_roch_basis(bound, bound)) ws.push_back(curve_.pole_order_inf(m));
    const int n = static_cast<int>(ws.size());
    const std::uint64_t any = f.size() - 1, prime = f.characteristic() - 1;
    std::uint64_t total = 1;
    for (int s = 1; s <= n; ++s) {
        std::uint64_t per = 1;
        for (int i = 0; i < s; ++i) per *= (s <= 3 ? any : prime);
        total += binomial(n, s) * per;
        if (total > max_size) {
            throw Error(Errc::SampleTooLarge, "curve sample for bound " + std::to_string(bound) +
                                                  " exceeds the cap " + std::to_string(max_size));
        }
    }

    std::vector<DensePoly> out;
    out.reserve(total);
    out.push_back({});
    const int lo = ws.front();
    const int width = ws.back() - lo + 1;
    std::vector<Elem> buf(width, f.zero());
    std::vector<int> pick;
    // Supports in size order, lexicographic within a size; coefficients as an
    // odometer over 1..top with the first support slot fastest.
    for (int s = 1; s <= n; ++s) {
        const std::uint32_t top = s <= 3 ? f.size() - 1 : f.characteristic() - 1;
        pick.resize(s);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<std::uint32_t> coeff(s, 1);
            while (true) {
                std::fill(buf.begin(), buf.end(), f.zero());
                for (int i = 0; i < s; ++i) buf[ws[pick[i]] - lo] = Elem{coeff[i]};
                out.push_back(DensePoly::from_coefficients(lo, buf.data(), width));
                int i = 0;
                while (i < s && coeff[i] == top) coeff[i++] = 1;
                if (i == s) break;
                ++coeff[i];
            }
            int i = s - 1;
            while (i >= 0 && pick[i] == n - s + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

class ScaledModel final : public NWeightModel {
public:
    ScaledModel(ModelPtr inner, int factor) : NWeightModel(inner->field()), inner_(std::move(inner)), factor_(factor) {
        if (factor < 1) throw Error(Errc::InvalidArgument, "scale factor must be positive");
    }
    std::string name() const override { return inner_->name() + "*" + std::to_string(factor_); }
    ModelClaims claims() const override { return inner_->claims(); }
    DensePoly mul(const DensePoly& a, const DensePoly& b) const override { return inner_->mul(a, b); }
    Weight weight(const DensePoly& a) const override {
        const Weight w = inner_->weight(a);
        return w == kNegInf ? kNegInf : w * factor_;
    }
    std::vector<DensePoly> sample(int bound, std::size_t max_size) const override {
        return inner_->sample(bound, max_size);
    }
    std::string describe_sample(int bound) const override { return inner_->describe_sample(bound); }
    std::string format(const DensePoly& a) const override { return inner_->format(a); }

private:
    ModelPtr inner_;
    int factor_;
};

class NormalizedModel final : public NWeightModel {
public:
    NormalizedModel(ModelPtr inner, int d)
        : NWeightModel(inner->field()), inner_(std::move(inner)), d_(d), unit_(inner_->unit_weight()) {}
    std::string name() const override { return "normalized(" + inner_->name() + ")"; }
    ModelClaims claims() const override { return inner_->claims(); }
    DensePoly mul(const DensePoly& a, const DensePoly& b) const override { return inner_->mul(a, b); }
    Weight weight(const DensePoly& a) const override {
        const Weight w = inner_->weight(a);
        if (w == kNegInf) return kNegInf;
        return w <= unit_ ? 0 : w / d_;
    }
    std::vector<DensePoly> sample(int bound, std::size_t max_size) const override {
        return inner_->sample(bound, max_size);
    }
    std::string describe_sample(int bound) const override { return inner_->describe_sample(bound); }
    std::string format(const DensePoly& a) const override { return inner_->format(a); }

private:
    ModelPtr inner_;
    int d_;
    Weight unit_;
};

}  // namespace

ModelPtr model_constant(const Field& f, int c) { return std::make_shared<ConstantModel>(f, c); }
ModelPtr model_ideal(const Field& f, std::vector<Elem> g) { return std::make_shared<IdealModel>(f, std::move(g)); }
ModelPtr model_laurent(const Field& f) { return std::make_shared<LaurentModel>(f); }
ModelPtr model_curve(const HermitianCurve& c, CurveSide side) { return std::make_shared<CurveModel>(c, side); }
ModelPtr model_scaled(ModelPtr inner, int factor) { return std::make_shared<ScaledModel>(std::move(inner), factor); }

DensePoly curve_to_dense(const HermitianCurve& c, const TwoPointFunction& f) {
    if (f.is_zero()) return {};
    int lo = INT_MAX, hi = INT_MIN;
    for (const auto& [m, coeff] : f.terms()) {
        if (m.a < 0 || m.a > c.q()) throw Error(Errc::InvalidArgument, "function is not reduced");
        lo = std::min(lo, c.pole_order_inf(m));
        hi = std::max(hi, c.pole_order_inf(m));
    }
    std::vector<Elem> buf(hi - lo + 1, c.field().zero());
    for (const auto& [m, coeff] : f.terms()) buf[c.pole_order_inf(m) - lo] = coeff;
    return DensePoly::from_coefficients(lo, buf.data(), static_cast<int>(buf.size()));
}

TwoPointFunction curve_from_dense(const HermitianCurve& c, const DensePoly& f) {
    TwoPointFunction out;
    if (f.is_zero()) return out;
    for (int w = f.lo(); w <= f.hi(); ++w) {
        const Elem coeff = f.coeff(w);
        if (!coeff.is_zero()) out = c.add(out, TwoPointFunction::monomial(c.monomial_with_pole_order(w), coeff));
    }
    return out;
}

// ------------------------------------------------------------ axiom_check

namespace {

enum Ax : int { kN0, kN1, kN2, kN3, kN4, kN5, kO3, kO4, kMaxRule, kUnique, kEqualLevel, kNoZeroDiv, kUnitsClosed, kAxCount };

using Key = std::array<std::size_t, 3>;

/// Smallest failing key seen for each property, so the reported witness does
/// not depend on how work was split between workers.
struct Failures {
    std::array<std::optional<Key>, kAxCount> first;

    void offer(Ax ax, Key k) {
        if (!first[ax] || k < *first[ax]) first[ax] = k;
    }
    void merge(const Failures& o) {
        for (int a = 0; a < kAxCount; ++a)
            if (o.first[a]) offer(static_cast<Ax>(a), *o.first[a]);
    }
};

/// Min and max of rho(f h) over the f of one level, ties to the lower index.
struct Extremes {
    Weight mn = INT_MAX;
    Weight mx = INT_MIN;
    std::uint32_t arg_mn = 0;
    std::uint32_t arg_mx = 0;

    void offer(Weight v, std::uint32_t idx) {
        if (v < mn || (v == mn && idx < arg_mn)) mn = v, arg_mn = idx;
        if (v > mx || (v == mx && idx < arg_mx)) mx = v, arg_mx = idx;
    }
    void merge(const Extremes& o) {
        if (o.mn != INT_MAX) offer(o.mn, o.arg_mn);
        if (o.mx != INT_MIN) offer(o.mx, o.arg_mx);
    }
};

/// Runs body(row) for every row of an n-row triangle, pairing short and long
/// rows so that workers get similar amounts of work.
template <class Body>
void folded_rows(std::size_t n, unsigned workers, Body&& body) {
    const std::size_t half = (n + 1) / 2;
    parallel_chunks(
        half,
        [&](std::size_t begin, std::size_t end, unsigned worker) {
            for (std::size_t k = begin; k < end; ++k) {
                body(k, worker);
                if (n - 1 - k != k) body(n - 1 - k, worker);
            }
        },
        workers);
}

Weight add_weights(Weight a, Weight b) { return (a == kNegInf || b == kNegInf) ? kNegInf : a + b; }

}  // namespace

const Check& AxiomReport::at(std::string_view name) const {
    for (const auto& v : verdicts)
        if (v.name == name) return v;
    throw Error(Errc::InvalidArgument, "no verdict named " + std::string(name));
}

bool AxiomReport::passes(std::initializer_list<std::string_view> names) const {
    return std::all_of(names.begin(), names.end(), [&](std::string_view n) { return at(n).pass; });
}

AxiomReport axiom_check(const NWeightModel& model, int bound, std::size_t max_sample) {
    return axiom_check(model, model.sample(bound, max_sample), model.describe_sample(bound));
}

AxiomReport axiom_check(const NWeightModel& model, const std::vector<DensePoly>& s, std::string description) {
    const Field& field = model.field();
    const std::vector<Elem> scalars = field.nonzero_elements();
    const Weight unit = model.unit_weight();
    auto in_m = [&](Weight w) { return w > unit; };
    const unsigned workers = worker_count();

    // Single elements: N0, N1, keyed by sample index.
    Failures total;
    {
        std::vector<Failures> fails(workers);
        parallel_chunks(
            s.size(),
            [&](std::size_t begin, std::size_t end, unsigned wk) {
                for (std::size_t i = begin; i < end; ++i) {
                    const Weight wi = model.weight(s[i]);
                    if ((wi == kNegInf) != s[i].is_zero()) fails[wk].offer(kN0, {i, 0, 0});
                    for (std::size_t l = 0; l < scalars.size(); ++l)
                        if (model.weight(model.scale(scalars[l], s[i])) != wi) fails[wk].offer(kN1, {i, l, 0});
                }
            },
            workers);
        for (const auto& f : fails) total.merge(f);
    }

    // When N1 holds, rho is constant on each orbit {c*f : c != 0}, so every
    // remaining property only needs one monic element per orbit, with sums
    // taken against all multiples c*g. Otherwise the sample is used as is.
    const bool by_orbit = !total.first[kN1];
    std::vector<DensePoly> base;
    std::vector<Elem> ratios{field.one()};
    if (by_orbit) {
        std::set<std::vector<std::uint32_t>> seen;
        for (const DensePoly& f : s) {
            const DensePoly g = f.is_zero() ? f : model.scale(field.inv(f.coeff(f.lo())), f);
            std::vector<std::uint32_t> key{static_cast<std::uint32_t>(g.lo()), static_cast<std::uint32_t>(g.length())};
            for (int i = 0; i < g.length(); ++i) key.push_back(g.data()[i]);
            if (seen.insert(std::move(key)).second) base.push_back(g);
        }
        ratios = scalars;
    } else {
        base = s;
    }
    const std::size_t n = base.size();

    std::vector<Weight> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = model.weight(base[i]);
    std::vector<Weight> level_values(w.begin(), w.end());
    std::sort(level_values.begin(), level_values.end());
    level_values.erase(std::unique(level_values.begin(), level_values.end()), level_values.end());
    const std::size_t levels = level_values.size();
    std::vector<std::uint32_t> lvl(n);
    std::vector<std::vector<std::uint32_t>> members(levels);
    for (std::size_t i = 0; i < n; ++i) {
        lvl[i] = static_cast<std::uint32_t>(std::lower_bound(level_values.begin(), level_values.end(), w[i]) -
                                            level_values.begin());
        members[lvl[i]].push_back(static_cast<std::uint32_t>(i));
    }

    // Unordered pairs: sums and products. rho(f h) is folded into per-(h, level)
    // extremes, which decide N3 and its relatives over all triples exactly.
    std::vector<Failures> fails(workers);
    std::vector<std::vector<Extremes>> ext(workers, std::vector<Extremes>(n * levels));
    folded_rows(n, workers, [&](std::size_t i, unsigned wk) {
        Failures& fl = fails[wk];
        auto& ex = ext[wk];
        for (std::size_t j = i; j < n; ++j) {
            const Weight wi = w[i], wj = w[j];
            for (std::size_t l = 0; l < ratios.size(); ++l) {
                const Weight ws = model.weight(model.add(base[i], model.scale(ratios[l], base[j])));
                if (ws > std::max(wi, wj)) fl.offer(kN2, {i, j, l});
                if (wi != wj && ws != std::max(wi, wj)) fl.offer(kMaxRule, {i, j, l});
            }

            const DensePoly p = model.mul(base[i], base[j]);
            const Weight wp = model.weight(p);
            const Weight sum = add_weights(wi, wj);
            if (wp > sum || (in_m(wi) && in_m(wj) && wp != sum)) fl.offer(kN5, {i, j, 0});
            if (p.is_zero() && ((in_m(wi) && wj != kNegInf) || (in_m(wj) && wi != kNegInf)))
                fl.offer(kNoZeroDiv, {i, j, 0});
            if (!in_m(wi) && !in_m(wj) && in_m(wp)) fl.offer(kUnitsClosed, {i, j, 0});

            ex[j * levels + lvl[i]].offer(wp, static_cast<std::uint32_t>(i));
            if (i != j) ex[i * levels + lvl[j]].offer(wp, static_cast<std::uint32_t>(j));
        }
    });
    for (unsigned wk = 1; wk < workers; ++wk)
        for (std::size_t k = 0; k < n * levels; ++k) ext[0][k].merge(ext[wk][k]);
    std::vector<Extremes> agg = std::move(ext[0]);
    ext.clear();

    for (std::size_t h = 0; h < n; ++h) {
        const Extremes* row = &agg[h * levels];
        // Running maximum of rho(f h) over levels strictly below b.
        Weight run = INT_MIN;
        std::uint32_t run_arg = 0;
        for (std::size_t b = 0; b < levels; ++b) {
            if (b > 0) {
                const Weight lo = row[b].mn;
                if (run > lo) fails[0].offer(kN3, {h, run_arg, row[b].arg_mn});
                if (in_m(w[h]) && run >= lo) fails[0].offer(kN3, {h, run_arg, row[b].arg_mn});
                if (w[h] != kNegInf && run >= lo) fails[0].offer(kO3, {h, run_arg, row[b].arg_mn});
            }
            if (row[b].mx > run) run = row[b].mx, run_arg = row[b].arg_mx;
            if (in_m(w[h]) && in_m(level_values[b]) && row[b].mn != row[b].mx)
                fails[0].offer(kEqualLevel, {h, row[b].arg_mn, row[b].arg_mx});
        }
    }
    agg.clear();

    // Pairs within a level: N4, uniqueness of lambda, O4. Unordered pairs
    // suffice: under N1 the lambdas for (g, f) are the inverses of those for
    // (f, g). Without N1 both orders are tried.
    for (std::size_t b = 0; b < levels; ++b) {
        const Weight v = level_values[b];
        if (v == kNegInf) continue;
        const auto& mem = members[b];
        std::vector<std::vector<DensePoly>> scaled(mem.size());
        for (std::size_t u = 0; u < mem.size(); ++u)
            for (Elem c : scalars) scaled[u].push_back(model.scale(c, base[mem[u]]));
        folded_rows(mem.size(), workers, [&](std::size_t u, unsigned wk) {
            for (std::size_t t = by_orbit ? u : 0; t < mem.size(); ++t) {
                int hits = 0;
                for (const DensePoly& lg : scaled[t])
                    if (model.weight(model.sub(base[mem[u]], lg)) < v) ++hits;
                const Key k{mem[u], mem[t], 0};
                if (hits == 0) {
                    fails[wk].offer(kO4, k);
                    if (in_m(v)) fails[wk].offer(kN4, k);
                }
                if (hits > 1 && in_m(v)) fails[wk].offer(kUnique, k);
            }
        });
    }
    for (const auto& f : fails) total.merge(f);

    // Witnesses. N0 and N1 keys index the sample, the rest index `base`.
    auto ws = [&](const DensePoly& p) { return weight_string(model.weight(p)); };
    auto fmt = [&](std::size_t i) { return model.format(base[i]); };
    using Fields = std::vector<std::pair<std::string, std::string>>;
    auto lambda_scan = [&](std::size_t i, std::size_t j) {
        std::string out;
        for (Elem c : scalars) {
            if (!out.empty()) out += ',';
            out += std::to_string(c.index) + ":" + ws(model.sub(base[i], model.scale(c, base[j])));
        }
        return out;
    };
    auto sum_w = [&](const Key& k) {
        const DensePoly g = model.scale(ratios[k[2]], base[k[1]]);
        return Fields{{"f", fmt(k[0])},
                      {"g", model.format(g)},
                      {"rho(f)", weight_string(w[k[0]])},
                      {"rho(g)", ws(g)},
                      {"rho(f+g)", ws(model.add(base[k[0]], g))}};
    };
    auto prod_w = [&](const Key& k) {
        return Fields{{"f", fmt(k[0])},
                      {"g", fmt(k[1])},
                      {"rho(f)", weight_string(w[k[0]])},
                      {"rho(g)", weight_string(w[k[1]])},
                      {"rho(fg)", ws(model.mul(base[k[0]], base[k[1]]))}};
    };
    auto triple_w = [&](const Key& k) {
        const std::size_t h = k[0], f = k[1], g = k[2];
        return Fields{{"f", fmt(f)},
                      {"g", fmt(g)},
                      {"h", fmt(h)},
                      {"rho(f)", weight_string(w[f])},
                      {"rho(g)", weight_string(w[g])},
                      {"rho(h)", weight_string(w[h])},
                      {"rho(fh)", ws(model.mul(base[f], base[h]))},
                      {"rho(gh)", ws(model.mul(base[g], base[h]))}};
    };
    auto level_w = [&](const Key& k) {
        return Fields{{"f", fmt(k[0])},
                      {"g", fmt(k[1])},
                      {"rho(f)", weight_string(w[k[0]])},
                      {"rho(g)", weight_string(w[k[1]])},
                      {"lambda:rho(f-lambda*g)", lambda_scan(k[0], k[1])}};
    };
    auto n0_w = [&](const Key& k) {
        return Fields{{"f", model.format(s[k[0]])}, {"rho(f)", ws(s[k[0]])}};
    };
    auto n1_w = [&](const Key& k) {
        const Elem c = scalars[k[1]];
        return Fields{{"f", model.format(s[k[0]])},
                      {"lambda", std::to_string(c.index)},
                      {"rho(f)", ws(s[k[0]])},
                      {"rho(lambda*f)", ws(model.scale(c, s[k[0]]))}};
    };

    AxiomReport report;
    report.model = model.name();
    report.sample = std::move(description);
    if (by_orbit) report.sample += "; pairs and triples over " + std::to_string(n) + " monic orbit representatives";
    report.sample_size = s.size();
    report.claims = model.claims();
    auto emit = [&](const std::string& name, Ax ax, auto&& witness) {
        Check c;
        c.name = name;
        if (total.first[ax]) {
            c.pass = false;
            c.witness = witness(*total.first[ax]);
        }
        report.verdicts.push_back(std::move(c));
    };
    emit("N0", kN0, n0_w);
    emit("N1", kN1, n1_w);
    emit("N2", kN2, sum_w);
    emit("N3", kN3, triple_w);
    emit("N4", kN4, level_w);
    emit("N5", kN5, prod_w);
    emit("O0", kN0, n0_w);
    emit("O1", kN1, n1_w);
    emit("O2", kN2, sum_w);
    emit("O3", kO3, triple_w);
    emit("O4", kO4, level_w);
    emit("unique_lambda", kUnique, level_w);
    emit("max_rule", kMaxRule, sum_w);
    emit("equal_level_products", kEqualLevel, triple_w);
    emit("no_zero_divisors", kNoZeroDiv, prod_w);
    emit("units_closed", kUnitsClosed, prod_w);

    report.units_are_constants = true;
    std::optional<std::size_t> non_constant_unit;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Weight wi = model.weight(s[i]);
        if (wi != kNegInf && !in_m(wi) && !s[i].is_constant()) {
            report.units_are_constants = false;
            non_constant_unit = i;
            break;
        }
    }
    Check cls;
    cls.name = "order_classification";
    const bool order = report.order();
    const bool n_order_with_field_units = report.n_order() && report.units_are_constants;
    cls.pass = order == n_order_with_field_units;
    cls.witness = {{"order", order ? "true" : "false"},
                   {"n_order", report.n_order() ? "true" : "false"},
                   {"units_are_constants", report.units_are_constants ? "true" : "false"}};
    if (non_constant_unit) cls.witness.emplace_back("non_constant_unit", model.format(s[*non_constant_unit]));
    report.verdicts.push_back(std::move(cls));
    return report;
}

// -------------------------------------------------------------- normalize

NormalizeResult normalize(ModelPtr model, int bound, std::size_t max_sample) {
    const auto s = model->sample(bound, max_sample);
    const Weight unit = model->unit_weight();
    std::vector<Weight> values;
    for (const auto& f : s) {
        const Weight w = model->weight(f);
        if (w > unit) values.push_back(w);
    }
    if (values.empty()) throw Error(Errc::TrivialModel, model->name() + " has no sampled element above rho(1)");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    int d = 0;
    for (Weight v : values) d = std::gcd(d, v);

    NormalizeResult r;
    r.gcd = d;
    r.sampled_values = values;
    r.caveat = "gcd taken over rho values of M on the sample (" + model->describe_sample(bound) +
               "); the gcd over all of M may be smaller";
    r.model = std::make_shared<NormalizedModel>(std::move(model), d);
    return r;
}

// ------------------------------------------------------- filtration_check

const Check& FiltrationReport::at(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw Error(Errc::InvalidArgument, "no check named " + std::string(name));
}

bool FiltrationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

FiltrationReport filtration_check(const NWeightModel& model, int bound, std::size_t max_sample) {
    const auto s = model.sample(bound, max_sample);
    const std::size_t n = s.size();
    const Weight unit = model.unit_weight();
    const Field& field = model.field();

    std::vector<Weight> w(n);
    Weight top = kNegInf;
    bool nontrivial = false;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = model.weight(s[i]);
        top = std::max(top, w[i]);
        nontrivial |= w[i] > unit;
    }
    if (!nontrivial) throw Error(Errc::TrivialModel, model.name() + " has no sampled element above rho(1)");

    // Observed values: the sample and all pairwise products of it. Products
    // with a nonzero unit also feed the sampled estimate of ell(i, 0).
    const unsigned workers = worker_count();
    std::vector<std::set<Weight>> seen(workers);
    std::vector<std::map<Weight, Weight>> with_unit(workers);
    auto is_unit = [&](std::size_t i) { return w[i] != kNegInf && w[i] <= unit; };
    folded_rows(n, workers, [&](std::size_t i, unsigned wk) {
        for (std::size_t j = i; j < n; ++j) {
            const Weight wp = model.weight(model.mul(s[i], s[j]));
            if (wp == kNegInf) continue;
            seen[wk].insert(wp);
            if (is_unit(j) && w[i] != kNegInf) {
                auto [it, fresh] = with_unit[wk].emplace(w[i], wp);
                if (!fresh) it->second = std::max(it->second, wp);
            }
            if (is_unit(i) && w[j] != kNegInf) {
                auto [it, fresh] = with_unit[wk].emplace(w[j], wp);
                if (!fresh) it->second = std::max(it->second, wp);
            }
        }
    });
    std::set<Weight> all;
    for (Weight x : w)
        if (x != kNegInf) all.insert(x);
    std::map<Weight, Weight> unit_products;
    for (unsigned wk = 0; wk < workers; ++wk) {
        all.insert(seen[wk].begin(), seen[wk].end());
        for (const auto& [k, v] : with_unit[wk]) {
            auto [it, fresh] = unit_products.emplace(k, v);
            if (!fresh) it->second = std::max(it->second, v);
        }
    }
    const std::vector<Weight> values(all.begin(), all.end());
    auto iota = [&](Weight x) {
        return static_cast<int>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
    };
    // Levels 0..K are those at or below the largest sampled value.
    const int K = iota(top);

    FiltrationReport r;
    r.model = model.name();
    r.sample = model.describe_sample(bound);
    r.sample_size = n;
    r.values = values;
    r.caveat =
        "rho_i are the values seen on the sample and its pairwise products; ell(i,0) is the largest index "
        "reached by products with sampled units, a lower estimate";

    std::vector<std::optional<std::size_t>> rep(K + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == kNegInf) continue;
        const int k = iota(w[i]);
        if (k <= K && !rep[k]) rep[k] = i;
    }
    for (int i = 0; i <= K; ++i) r.representatives.push_back(rep[i] ? model.format(s[*rep[i]]) : "");

    auto add_check = [&](std::string name) -> Check& {
        r.checks.push_back(Check{std::move(name), true, {}});
        return r.checks.back();
    };
    auto fail = [](Check& c, std::vector<std::pair<std::string, std::string>> witness) {
        if (!c.pass) return;
        c.pass = false;
        c.witness = std::move(witness);
    };

    Check& reps = add_check("representatives");
    for (int i = 0; i <= K; ++i) {
        if (!rep[i]) {
            fail(reps, {{"i", std::to_string(i)}, {"rho_i", weight_string(values[i])}, {"reason", "no sampled f"}});
        } else if (iota(w[*rep[i]]) != i || w[*rep[i]] != values[i]) {
            fail(reps, {{"i", std::to_string(i)}, {"f_i", model.format(s[*rep[i]])}});
        }
    }

    Check& constants = add_check("constants_in_L0");
    for (Elem c : field.nonzero_elements()) {
        if (model.weight(model.constant(c)) > values.front()) {
            fail(constants, {{"c", std::to_string(c.index)}, {"rho(c)", weight_string(model.weight(model.constant(c)))}});
        }
    }

    Check& growth = add_check("one_step_growth");
    const auto scalars = field.nonzero_elements();
    for (int i = 0; i < K && growth.pass; ++i) {
        std::vector<std::size_t> level;
        for (std::size_t k = 0; k < n; ++k)
            if (w[k] == values[i + 1]) level.push_back(k);
        if (level.empty()) {
            fail(growth, {{"i", std::to_string(i)}, {"rho_(i+1)", weight_string(values[i + 1])}});
            break;
        }
        for (std::size_t u = 0; u < level.size() && growth.pass; ++u) {
            for (std::size_t t = u; t < level.size(); ++t) {
                int hits = 0;
                for (Elem c : scalars)
                    if (model.weight(model.sub(s[level[u]], model.scale(c, s[level[t]]))) <= values[i]) ++hits;
                if (hits != 1) {
                    fail(growth, {{"i", std::to_string(i)},
                                  {"f", model.format(s[level[u]])},
                                  {"g", model.format(s[level[t]])},
                                  {"lambdas", std::to_string(hits)}});
                    break;
                }
            }
        }
    }

    // ell table; column and row 0 from the unit products.
    r.ell.assign(K + 1, std::vector<int>(K + 1, -1));
    int running = -1;
    for (int i = 0; i <= K; ++i) {
        auto it = unit_products.find(values[i]);
        if (it != unit_products.end()) running = std::max(running, iota(it->second));
        r.ell[i][0] = r.ell[0][i] = running;
    }
    Check& symmetric = add_check("ell_symmetric");
    for (int i = 1; i <= K; ++i) {
        for (int j = 1; j <= K; ++j) {
            if (!rep[i] || !rep[j]) continue;
            r.ell[i][j] = iota(model.weight(model.mul(s[*rep[i]], s[*rep[j]])));
            const int other = iota(model.weight(model.mul(s[*rep[j]], s[*rep[i]])));
            if (other != r.ell[i][j])
                fail(symmetric, {{"i", std::to_string(i)}, {"j", std::to_string(j)}});
        }
    }
    auto cell = [&](int i, int j) {
        return std::vector<std::pair<std::string, std::string>>{
            {"i", std::to_string(i)}, {"j", std::to_string(j)}, {"ell(i,j)", std::to_string(r.ell[i][j])},
            {"ell(i+1,j)", std::to_string(r.ell[i + 1][j])}};
    };
    Check& strict = add_check("ell_strict_in_i");
    for (int i = 1; i < K; ++i)
        for (int j = 1; j <= K; ++j)
            if (r.ell[i][j] >= 0 && r.ell[i + 1][j] >= 0 && r.ell[i][j] >= r.ell[i + 1][j]) fail(strict, cell(i, j));
    Check& weak = add_check("ell_weak_in_i_at_j0");
    for (int i = 0; i < K; ++i)
        if (r.ell[i][0] > r.ell[i + 1][0]) fail(weak, cell(i, 0));

    Check& sum_rule = add_check("sum_rule");
    for (int i = 1; i <= K; ++i) {
        for (int j = 1; j <= K; ++j) {
            if (r.ell[i][j] < 0) continue;
            if (values[r.ell[i][j]] != values[i] + values[j]) {
                fail(sum_rule, {{"i", std::to_string(i)},
                                {"j", std::to_string(j)},
                                {"rho_ell(i,j)", weight_string(values[r.ell[i][j]])},
                                {"rho_i+rho_j", std::to_string(values[i] + values[j])}});
            }
        }
    }
    Check& sum_bound = add_check("sum_bound_at_j0");
    for (int i = 0; i <= K; ++i) {
        if (r.ell[i][0] >= 0 && values[r.ell[i][0]] > values[i] + values[0]) {
            fail(sum_bound, {{"i", std::to_string(i)}, {"rho_ell(i,0)", weight_string(values[r.ell[i][0]])}});
        }
    }
    return r;
}

}  // namespace nord
