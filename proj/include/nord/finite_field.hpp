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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nord {

/// Element of GF(p^k). The index stores the coefficients of the residue
/// polynomial in base p, least significant digit first, so 0 and 1 are the
/// field's zero and one.
struct Elem {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
    constexpr bool is_zero() const { return index == 0; }
};

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // low-to-high, monic, length k+1
    std::uint32_t primitive = 0;

    // Full Cayley tables are kept for q <= kDenseLimit; larger fields fall
    // back to log/antilog multiplication and digit-wise addition.
    std::vector<std::uint16_t> add_tab;
    std::vector<std::uint16_t> mul_tab;
    std::vector<std::uint16_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;  // inv[0] unused

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
};

}  // namespace detail

/// A finite field GF(p^k) with q = p^k <= 2^16. Immutable after `make`;
/// copies share the same tables, so passing by value is cheap.
class Field {
public:
    static constexpr std::uint32_t kMaxSize = 1u << 16;
    static constexpr std::uint32_t kDenseLimit = 256;

    /// Builds GF(p^k). Without an explicit modulus the lexicographically
    /// smallest monic irreducible of degree k is used, comparing
    /// coefficients from the constant term upwards.
    static Field make(std::uint32_t p, std::uint32_t k,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const { return t_->p; }
    std::uint32_t degree() const { return t_->k; }
    std::uint32_t size() const { return t_->q; }
    const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
    Elem primitive() const { return Elem{t_->primitive}; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// Checked conversion from a decimal index.
    Elem element(std::uint64_t index) const;
    bool contains(Elem a) const { return a.index < t_->q; }
    std::vector<Elem> elements() const;
    std::vector<Elem> nonzero_elements() const;

    Elem add(Elem a, Elem b) const {
        if (t_->p == 2) return Elem{a.index ^ b.index};
        if (!t_->add_tab.empty()) return Elem{t_->add_tab[a.index * t_->q + b.index]};
        return Elem{t_->add_digits(a.index, b.index)};
    }
    Elem neg(Elem a) const { return Elem{t_->neg[a.index]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (!t_->mul_tab.empty()) return Elem{t_->mul_tab[a.index * t_->q + b.index]};
        if (a.index == 0 || b.index == 0) return Elem{0};
        return Elem{t_->exp[t_->log[a.index] + t_->log[b.index]]};
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^e; negative exponents invert first.
    Elem pow(Elem a, std::int64_t e) const;

    /// "GF(9) mod [1,0,1]" style description.
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
    }

private:
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
    std::shared_ptr<const detail::FieldTables> t_;
};

bool is_prime(std::uint64_t n);

/// Exhaustive irreducibility test for a monic polynomial over GF(p),
/// coefficients low-to-high.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace nord
