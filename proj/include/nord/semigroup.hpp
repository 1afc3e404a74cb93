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
#include <map>
#include <set>
#include <string>
#include <vector>

namespace nord {

/// Cofinite submonoid of (N0, +), stored by its gap set.
class NumericalSemigroup {
public:
    /// The full monoid N0.
    NumericalSemigroup() = default;

    /// Validates that the complement of `gaps` is additively closed.
    static NumericalSemigroup from_gaps(std::set<int> gaps);
    static NumericalSemigroup from_generators(const std::vector<int>& generators);

    const std::set<int>& gaps() const { return gaps_; }
    bool contains(int n) const { return n >= 0 && !gaps_.contains(n); }
    int genus() const { return static_cast<int>(gaps_.size()); }
    /// 0 when there are no gaps.
    int largest_gap() const { return gaps_.empty() ? 0 : *gaps_.rbegin(); }
    int conductor() const { return gaps_.empty() ? 0 : *gaps_.rbegin() + 1; }
    /// m_i with m_0 = 0 < m_1 < ...
    int nth_nongap(int i) const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
    explicit NumericalSemigroup(std::set<int> gaps) : gaps_(std::move(gaps)) {}
    std::set<int> gaps_;
};

struct Pair {
    int alpha = 0;
    int beta = 0;
    friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

/// Finite-genus subsemigroup of N0^2, stored by its gap set.
class TwoPointSemigroup {
public:
    TwoPointSemigroup() = default;

    /// Validates (0,0) exclusion and additive closure; a violation names the
    /// witness triple x + y = g with x, y nongaps and g a gap.
    static TwoPointSemigroup from_gaps(std::set<Pair> gaps);

    const std::set<Pair>& gaps() const { return gaps_; }
    bool contains(Pair p) const { return p.alpha >= 0 && p.beta >= 0 && !gaps_.contains(p); }
    int genus() const { return static_cast<int>(gaps_.size()); }
    /// Side of the square [0, box]^2 used for validation: at least
    /// 2*genus+2 and large enough to hold every gap.
    int box() const;

    /// H(rho) = {a : (a,0) in H}.
    NumericalSemigroup project_rho() const;
    /// H(sigma) = {b : (0,b) in H}.
    NumericalSemigroup project_sigma() const;

    friend bool operator==(const TwoPointSemigroup&, const TwoPointSemigroup&) = default;

private:
    explicit TwoPointSemigroup(std::set<Pair> gaps) : gaps_(std::move(gaps)) {}
    std::set<Pair> gaps_;
};

struct GapBijectionReport {
    bool pass = true;
    std::vector<std::string> violations;
};

/// The map i -> sigma(f_i) of a good basis, kept sparse (zero entries are
/// omitted). This is the only input the bound engine needs.
class GoodBasisProfile {
public:
    GoodBasisProfile() = default;

    /// Validates the gap-bijection invariants; throws
    /// ProfileBijectionViolation on failure.
    static GoodBasisProfile make(int genus, std::map<int, int> entries);
    /// No validation; for diagnostics on possibly malformed input.
    static GoodBasisProfile unchecked(int genus, std::map<int, int> entries);

    int genus() const { return genus_; }
    const std::map<int, int>& entries() const { return entries_; }
    /// sigma(f_i); zero off the support.
    int sigma(int i) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? 0 : it->second;
    }
    int lambda_sigma() const { return lambda_sigma_; }
    int lambda_rho() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
    /// Smallest index attaining lambda_sigma; 0 for the empty profile.
    int s_index() const { return s_index_; }
    std::set<int> rho_gaps() const;
    std::set<int> sigma_gaps() const;

    friend bool operator==(const GoodBasisProfile& a, const GoodBasisProfile& b) {
        return a.genus_ == b.genus_ && a.entries_ == b.entries_;
    }

private:
    GoodBasisProfile(int genus, std::map<int, int> entries);

    int genus_ = 0;
    std::map<int, int> entries_;
    int lambda_sigma_ = 0;
    int s_index_ = 0;
};

/// Column minima min{t : (i,t) in H}; validates the result.
GoodBasisProfile tps_profile(const TwoPointSemigroup& t);

/// sigma(f_i) = i for 1 <= i <= gamma.
GoodBasisProfile hyperelliptic_profile(int gamma);

GapBijectionReport profile_check_gap_bijection(const GoodBasisProfile& profile);

}  // namespace nord
