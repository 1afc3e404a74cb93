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

#include "nord/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "nord/error.hpp"

namespace nord {

namespace {

std::string pair_str(Pair p) { return "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + ")"; }

// First x + y = g with x, y outside `gaps` and g inside, or nothing.
std::optional<std::pair<int, int>> closure_witness(const std::set<int>& gaps) {
    for (int g : gaps) {
        for (int x = 1; x <= g / 2; ++x) {
            if (!gaps.contains(x) && !gaps.contains(g - x)) return std::pair{x, g - x};
        }
    }
    return std::nullopt;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_gaps(std::set<int> gaps) {
    if (gaps.contains(0)) throw Error(Errc::ZeroExcludedViolation, "0 cannot be a gap");
    if (!gaps.empty() && *gaps.begin() < 0) throw Error(Errc::InvalidArgument, "gaps must be positive");
    if (auto w = closure_witness(gaps)) {
        throw Error(Errc::ClosureViolation, std::to_string(w->first) + " + " + std::to_string(w->second) + " = " +
                                                std::to_string(w->first + w->second) + " is a gap");
    }
    return NumericalSemigroup(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int>& generators) {
    int g = 0;
    for (int x : generators) {
        if (x <= 0) throw Error(Errc::InvalidArgument, "generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw Error(Errc::NotCoprime, "generators must have gcd 1");
    const int smallest = *std::min_element(generators.begin(), generators.end());

    // Reachability; once `smallest` consecutive integers are reachable every
    // larger integer is too.
    std::vector<char> reach{1};
    std::set<int> gaps;
    int run = 1;
    for (int n = 1; run < smallest; ++n) {
        bool ok = false;
        for (int x : generators) {
            if (x <= n && reach[n - x]) {
                ok = true;
                break;
            }
        }
        reach.push_back(ok);
        if (ok) {
            ++run;
        } else {
            run = 0;
            gaps.insert(n);
        }
    }
    return NumericalSemigroup(std::move(gaps));
}

int NumericalSemigroup::nth_nongap(int i) const {
    if (i < 0) throw Error(Errc::InvalidArgument, "nongap index must be nonnegative");
    int n = 0;
    for (int seen = -1;; ++n) {
        if (!gaps_.contains(n) && ++seen == i) return n;
    }
}

TwoPointSemigroup TwoPointSemigroup::from_gaps(std::set<Pair> gaps) {
    if (gaps.contains(Pair{0, 0})) throw Error(Errc::ZeroExcludedViolation, "(0,0) cannot be a gap");
    for (const auto& g : gaps) {
        if (g.alpha < 0 || g.beta < 0) throw Error(Errc::InvalidArgument, "gap " + pair_str(g) + " is not in N0^2");
    }
    // Any decomposition g = x + y has both summands below g componentwise,
    // so scanning below each gap is exhaustive.
    for (const auto& g : gaps) {
        for (int a = 0; a <= g.alpha; ++a) {
            for (int b = 0; b <= g.beta; ++b) {
                const Pair x{a, b}, y{g.alpha - a, g.beta - b};
                if (x == Pair{0, 0} || y == Pair{0, 0}) continue;
                if (!gaps.contains(x) && !gaps.contains(y)) {
                    throw Error(Errc::ClosureViolation,
                                pair_str(x) + " + " + pair_str(y) + " = " + pair_str(g) + " is a gap");
                }
            }
        }
    }
    return TwoPointSemigroup(std::move(gaps));
}

int TwoPointSemigroup::box() const {
    int b = 2 * genus() + 2;
    for (const auto& g : gaps_) b = std::max({b, g.alpha, g.beta});
    return b;
}

NumericalSemigroup TwoPointSemigroup::project_rho() const {
    std::set<int> g;
    for (const auto& p : gaps_)
        if (p.beta == 0) g.insert(p.alpha);
    return NumericalSemigroup::from_gaps(std::move(g));
}

NumericalSemigroup TwoPointSemigroup::project_sigma() const {
    std::set<int> g;
    for (const auto& p : gaps_)
        if (p.alpha == 0) g.insert(p.beta);
    return NumericalSemigroup::from_gaps(std::move(g));
}

GoodBasisProfile::GoodBasisProfile(int genus, std::map<int, int> entries)
    : genus_(genus), entries_(std::move(entries)) {
    for (const auto& [i, v] : entries_) {
        if (v > lambda_sigma_) {
            lambda_sigma_ = v;
            s_index_ = i;
        }
    }
}

GoodBasisProfile GoodBasisProfile::unchecked(int genus, std::map<int, int> entries) {
    std::erase_if(entries, [](const auto& kv) { return kv.second == 0; });
    return GoodBasisProfile(genus, std::move(entries));
}

GoodBasisProfile GoodBasisProfile::make(int genus, std::map<int, int> entries) {
    auto p = unchecked(genus, std::move(entries));
    auto report = profile_check_gap_bijection(p);
    if (!report.pass) throw Error(Errc::ProfileBijectionViolation, report.violations.front());
    return p;
}

std::set<int> GoodBasisProfile::rho_gaps() const {
    std::set<int> out;
    for (const auto& kv : entries_) out.insert(kv.first);
    return out;
}

std::set<int> GoodBasisProfile::sigma_gaps() const {
    std::set<int> out;
    for (const auto& kv : entries_) out.insert(kv.second);
    return out;
}

GoodBasisProfile tps_profile(const TwoPointSemigroup& t) {
    std::map<int, int> entries;
    const int box = t.box();
    for (int i = 1; i <= box; ++i) {
        int m = 0;
        while (!t.contains(Pair{i, m})) ++m;
        if (m > 0) entries[i] = m;
    }
    auto profile = GoodBasisProfile::unchecked(static_cast<int>(entries.size()), entries);
    auto report = profile_check_gap_bijection(profile);
    if (!report.pass) throw Error(Errc::ProfileBijectionViolation, report.violations.front());
    if (profile.rho_gaps() != t.project_rho().gaps()) {
        throw Error(Errc::ProfileBijectionViolation, "profile support differs from Gaps(H(rho))");
    }
    if (profile.sigma_gaps() != t.project_sigma().gaps()) {
        throw Error(Errc::ProfileBijectionViolation, "profile values differ from Gaps(H(sigma))");
    }
    return profile;
}

GoodBasisProfile hyperelliptic_profile(int gamma) {
    if (gamma < 1) throw Error(Errc::InvalidArgument, "hyperelliptic genus must be positive");
    std::map<int, int> entries;
    for (int i = 1; i <= gamma; ++i) entries[i] = i;
    return GoodBasisProfile::make(gamma, std::move(entries));
}

GapBijectionReport profile_check_gap_bijection(const GoodBasisProfile& profile) {
    GapBijectionReport r;
    auto fail = [&](std::string msg) {
        r.pass = false;
        r.violations.push_back(std::move(msg));
    };

    std::map<int, int> seen;
    for (const auto& [i, v] : profile.entries()) {
        if (i <= 0) fail("index " + std::to_string(i) + " is not a positive integer");
        if (v <= 0) fail("value at index " + std::to_string(i) + " is not positive");
        if (auto it = seen.find(v); it != seen.end()) {
            fail("value " + std::to_string(v) + " repeated at indices " + std::to_string(it->second) + " and " +
                 std::to_string(i));
        } else {
            seen.emplace(v, i);
        }
    }
    const auto keys = profile.rho_gaps();
    const auto values = profile.sigma_gaps();
    if (static_cast<int>(keys.size()) != profile.genus()) {
        fail("genus " + std::to_string(profile.genus()) + " but " + std::to_string(keys.size()) + " rho-gaps");
    }
    if (keys.size() != values.size()) {
        fail(std::to_string(keys.size()) + " rho-gaps but " + std::to_string(values.size()) + " distinct sigma-gaps");
    }
    if (!keys.empty() && *keys.begin() > 0) {
        if (auto w = closure_witness(keys)) {
            fail("H(rho) not closed: " + std::to_string(w->first) + " + " + std::to_string(w->second) +
                 " is a rho-gap");
        }
    }
    if (!values.empty() && *values.begin() > 0) {
        if (auto w = closure_witness(values)) {
            fail("H(sigma) not closed: " + std::to_string(w->first) + " + " + std::to_string(w->second) +
                 " is a sigma-gap");
        }
    }
    return r;
}

}  // namespace nord
