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

#include "nord/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "nord/error.hpp"

namespace nord {

namespace {

using Poly = std::vector<std::uint32_t>;  // over GF(p), low-to-high

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), mod, p);
}

Poly digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
    Poly d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = index % p;
        index /= p;
    }
    trim(d);
    return d;
}

std::uint32_t index_of(const Poly& d, std::uint32_t p) {
    std::uint32_t index = 0;
    for (std::size_t i = d.size(); i-- > 0;) index = index * p + d[i];
    return index;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t lower = 0; lower < count; ++lower) {
            Poly g(d + 1, 0);
            std::uint64_t c = lower;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint32_t detail::FieldTables::add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return out;
}

Field Field::make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxSize) {
            throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^16");
        }
    }

    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<std::uint32_t>(q);

    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != k + 1 || m.back() != 1) {
            throw Error(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(k));
        }
        for (auto c : m)
            if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
        if (!is_irreducible(m, p)) throw Error(Errc::ReduciblePolynomial, "modulus is reducible over GF(p)");
        t->modulus = m;
    } else {
        // Lexicographic order with the constant term most significant.
        const std::uint64_t count = q;
        for (std::uint64_t rank = 0; rank < count && t->modulus.empty(); ++rank) {
            Poly cand(k + 1, 0);
            std::uint64_t r = rank;
            for (std::uint32_t i = k; i-- > 0;) {
                cand[i] = static_cast<std::uint32_t>(r % p);
                r /= p;
            }
            cand[k] = 1;
            if (is_irreducible(cand, p)) t->modulus = cand;
        }
    }

    const Poly& mod = t->modulus;
    const std::uint32_t n = t->q;

    // Primitive element: smallest index whose order is q-1.
    auto slow_pow = [&](std::uint32_t base, std::uint64_t e) {
        Poly result{1}, b = digits_of(base, p, k);
        while (e) {
            if (e & 1) result = poly_mulmod(result, b, mod, p);
            b = poly_mulmod(b, b, mod, p);
            e >>= 1;
        }
        return index_of(result, p);
    };
    const auto factors = prime_factors(n - 1);
    for (std::uint32_t g = 1; g < n; ++g) {
        bool primitive = true;
        for (auto f : factors) {
            if (slow_pow(g, (n - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            t->primitive = g;
            break;
        }
    }

    t->exp.assign(2 * (n - 1) + 1, 0);
    t->log.assign(n, 0);
    {
        const Poly g = digits_of(t->primitive, p, k);
        Poly cur{1};
        for (std::uint32_t i = 0; i < n - 1; ++i) {
            const std::uint32_t idx = index_of(cur, p);
            t->exp[i] = static_cast<std::uint16_t>(idx);
            t->exp[i + n - 1] = static_cast<std::uint16_t>(idx);
            t->log[idx] = i;
            cur = poly_mulmod(cur, g, mod, p);
        }
    }

    t->neg.assign(n, 0);
    t->inv.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        std::uint32_t out = 0, place = 1, x = a;
        for (std::uint32_t i = 0; i < k; ++i) {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        t->neg[a] = static_cast<std::uint16_t>(out);
        if (a != 0) t->inv[a] = t->exp[(n - 1 - t->log[a]) % (n - 1)];
    }

    if (n <= kDenseLimit) {
        t->add_tab.assign(std::size_t{n} * n, 0);
        t->mul_tab.assign(std::size_t{n} * n, 0);
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                t->add_tab[a * n + b] = static_cast<std::uint16_t>(t->add_digits(a, b));
                if (a != 0 && b != 0) t->mul_tab[a * n + b] = t->exp[t->log[a] + t->log[b]];
            }
        }
    }
    return Field(std::move(t));
}

Elem Field::element(std::uint64_t index) const {
    if (index >= t_->q) {
        throw Error(Errc::InvalidArgument,
                    "element index " + std::to_string(index) + " out of range for field of size " + std::to_string(t_->q));
    }
    return Elem{static_cast<std::uint32_t>(index)};
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(t_->q);
    for (std::uint32_t i = 0; i < t_->q; ++i) out[i] = Elem{i};
    return out;
}

std::vector<Elem> Field::nonzero_elements() const {
    std::vector<Elem> out;
    out.reserve(t_->q - 1);
    for (std::uint32_t i = 1; i < t_->q; ++i) out.push_back(Elem{i});
    return out;
}

Elem Field::inv(Elem a) const {
    if (a.index == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return Elem{t_->inv[a.index]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    if (e == 0) return one();
    if (a.index == 0) return zero();
    const std::uint64_t order = t_->q - 1;
    const std::uint64_t l = (std::uint64_t{t_->log[a.index]} * (static_cast<std::uint64_t>(e) % order)) % order;
    return Elem{t_->exp[l]};
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << t_->q << ") mod [";
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) os << (i ? "," : "") << t_->modulus[i];
    os << "]";
    return os.str();
}

}  // namespace nord
