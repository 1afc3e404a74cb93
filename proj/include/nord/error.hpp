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

#include <stdexcept>
#include <string>
#include <string_view>

namespace nord {

enum class Errc {
    NotPrime,
    ReduciblePolynomial,
    FieldTooLarge,
    DivisionByZero,
    InvalidArgument,
    NotCoprime,
    ClosureViolation,
    ZeroExcludedViolation,
    ProfileBijectionViolation,
    MBelowLambda,
    HypothesisNotMet,
    GIsConstant,
    SampleTooLarge,
    TrivialModel,
    UnsupportedQ,
    ZeroFunction,
    PoleAtPoint,
    BoxTooSmall,
    SearchTooLarge,
    SaturationNotReached,
    WordNotInLayer,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `name()` is the stable identifier
/// used in CLI diagnostics and reports.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

}  // namespace nord
