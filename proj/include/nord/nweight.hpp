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

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nord/finite_field.hpp"
#include "nord/hermitian.hpp"

namespace nord {

/// Values of a near-order function. rho(0) = -infinity is stored as
/// kNegInf, which compares below every genuine value.
using Weight = int;
inline constexpr Weight kNegInf = -1;

std::string weight_string(Weight w);

/// Sparse-free coefficient vector over a window of integer exponents. Every
/// model stores its elements this way: exponents are powers of t for the
/// polynomial models, powers of x = t and y = 1/t for the Laurent model, and
/// pole orders at infinity for the curve model.
class DensePoly {
public:
    static constexpr int kCapacity = 32;

    DensePoly() = default;
    static DensePoly monomial(int exponent, Elem c);
    /// Trims zeros at both ends; throws InvalidArgument past kCapacity.
    static DensePoly from_coefficients(int lo, const Elem* coeffs, int count);

    bool is_zero() const { return len_ == 0; }
    int terms() const;
    /// Lowest and highest exponent with a nonzero coefficient (nonzero only).
    int lo() const { return lo_; }
    int hi() const { return lo_ + len_ - 1; }
    Elem coeff(int exponent) const;
    /// Raw coefficient indices for exponents lo()..hi().
    const std::uint16_t* data() const { return c_.data(); }
    int length() const { return len_; }
    bool is_constant() const { return len_ == 1 && lo_ == 0; }

    static DensePoly add(const Field& f, const DensePoly& a, const DensePoly& b);
    static DensePoly sub(const Field& f, const DensePoly& a, const DensePoly& b);
    static DensePoly scale(const Field& f, Elem c, const DensePoly& a);

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        if (a.len_ != b.len_) return false;
        if (a.len_ == 0) return true;
        if (a.lo_ != b.lo_) return false;
        for (int i = 0; i < a.len_; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

private:
    template <class Op>
    static DensePoly combine(const DensePoly& a, const DensePoly& b, Op op);

    int lo_ = 0;
    int len_ = 0;
    std::array<std::uint16_t, kCapacity> c_{};
};

/// Which axiom families a model is expected to satisfy.
struct ModelClaims {
    bool n_order = false;
    bool n_weight = false;
    bool order = false;
};

/// An F-algebra with a value map rho. Models are immutable and safe to share
/// between threads.
class NWeightModel {
public:
    explicit NWeightModel(Field field) : field_(std::move(field)) {}
    virtual ~NWeightModel() = default;

    const Field& field() const { return field_; }

    DensePoly zero() const { return {}; }
    DensePoly one() const { return DensePoly::monomial(0, field_.one()); }
    DensePoly constant(Elem c) const { return DensePoly::monomial(0, c); }
    DensePoly add(const DensePoly& a, const DensePoly& b) const { return DensePoly::add(field_, a, b); }
    DensePoly sub(const DensePoly& a, const DensePoly& b) const { return DensePoly::sub(field_, a, b); }
    DensePoly scale(Elem c, const DensePoly& a) const { return DensePoly::scale(field_, c, a); }

    virtual std::string name() const = 0;
    virtual ModelClaims claims() const = 0;
    virtual DensePoly mul(const DensePoly& a, const DensePoly& b) const = 0;
    virtual Weight weight(const DensePoly& a) const = 0;
    /// Deterministic enumeration including zero. Throws SampleTooLarge when
    /// the sample would exceed max_size elements.
    virtual std::vector<DensePoly> sample(int bound, std::size_t max_size) const = 0;
    virtual std::string describe_sample(int bound) const = 0;
    virtual std::string format(const DensePoly& a) const = 0;

    /// rho(1); U = {rho <= rho(1)}, M = {rho > rho(1)}.
    Weight unit_weight() const { return weight(one()); }

private:
    Field field_;
};

using ModelPtr = std::shared_ptr<const NWeightModel>;

inline constexpr std::size_t kDefaultMaxSample = 1u << 15;

/// rho(f) = c for every f != 0 on F[t].
ModelPtr model_constant(const Field& f, int c);
/// rho(f) = 0 when g divides f != 0, 1 otherwise, on F[t]. g must not be a
/// constant (GIsConstant).
ModelPtr model_ideal(const Field& f, std::vector<Elem> g);
/// F[x, y] / (xy - 1) with rho(f1(x) + f2(y)) = deg f2, or 0 when f2 = 0.
ModelPtr model_laurent(const Field& f);

enum class CurveSide { Rho, Sigma };
/// Clipped pole order at infinity (Rho) or at (0,0) (Sigma) on the Hermitian
/// curve's two-point ring.
ModelPtr model_curve(const HermitianCurve& c, CurveSide side);
/// rho multiplied by `factor`; used to exercise normalization.
ModelPtr model_scaled(ModelPtr inner, int factor);

/// Converts between the curve model's storage and TwoPointFunction.
DensePoly curve_to_dense(const HermitianCurve& c, const TwoPointFunction& f);
TwoPointFunction curve_from_dense(const HermitianCurve& c, const DensePoly& f);

struct Check {
    std::string name;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> witness;
};

/// Verdicts over a finite sample. Axioms are named N0..N5 and O0..O4; the
/// derived properties carry descriptive names.
struct AxiomReport {
    std::string model;
    std::string sample;
    std::size_t sample_size = 0;
    ModelClaims claims;
    std::vector<Check> verdicts;

    const Check& at(std::string_view name) const;
    bool passes(std::initializer_list<std::string_view> names) const;
    bool n_order() const { return passes({"N0", "N1", "N2", "N3", "N4"}); }
    bool n_weight() const { return n_order() && passes({"N5"}); }
    bool order() const { return passes({"O0", "O1", "O2", "O3", "O4"}); }
    /// Nonzero sampled units are exactly the nonzero constants.
    bool units_are_constants = false;
};

AxiomReport axiom_check(const NWeightModel& model, int bound, std::size_t max_sample = kDefaultMaxSample);
AxiomReport axiom_check(const NWeightModel& model, const std::vector<DensePoly>& sample, std::string description);

struct NormalizeResult {
    ModelPtr model;
    int gcd = 1;
    std::vector<Weight> sampled_values;  // distinct rho values on sampled M
    std::string caveat;
};

/// Divides values on M by the gcd of the sampled M values and maps U to 0.
/// Throws TrivialModel when the sample meets no element of M.
NormalizeResult normalize(ModelPtr model, int bound, std::size_t max_sample = kDefaultMaxSample);

struct FiltrationReport {
    std::string model;
    std::string sample;
    std::size_t sample_size = 0;
    std::vector<Weight> values;                // rho_0 < rho_1 < ... seen
    std::vector<std::string> representatives;  // f_i, one per sampled level
    std::vector<std::vector<int>> ell;         // ell[i][j]; row and column 0 are sampled lower estimates
    std::vector<Check> checks;
    std::string caveat;

    const Check& at(std::string_view name) const;
    bool pass() const;
};

FiltrationReport filtration_check(const NWeightModel& model, int bound, std::size_t max_sample = kDefaultMaxSample);

}  // namespace nord
