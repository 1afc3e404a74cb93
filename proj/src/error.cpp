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

#include "nord/error.hpp"

namespace nord {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::ClosureViolation: return "ClosureViolation";
        case Errc::ZeroExcludedViolation: return "ZeroExcludedViolation";
        case Errc::ProfileBijectionViolation: return "ProfileBijectionViolation";
        case Errc::MBelowLambda: return "MBelowLambda";
        case Errc::HypothesisNotMet: return "HypothesisNotMet";
        case Errc::GIsConstant: return "GIsConstant";
        case Errc::SampleTooLarge: return "SampleTooLarge";
        case Errc::TrivialModel: return "TrivialModel";
        case Errc::UnsupportedQ: return "UnsupportedQ";
        case Errc::ZeroFunction: return "ZeroFunction";
        case Errc::PoleAtPoint: return "PoleAtPoint";
        case Errc::BoxTooSmall: return "BoxTooSmall";
        case Errc::SearchTooLarge: return "SearchTooLarge";
        case Errc::SaturationNotReached: return "SaturationNotReached";
        case Errc::WordNotInLayer: return "WordNotInLayer";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace nord
