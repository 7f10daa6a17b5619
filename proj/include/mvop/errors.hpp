/*
   Copyright 2026 The mvop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MVOP_ERRORS_HPP
#define MVOP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mvop {

enum class ErrorCode {
    NotDivisible,
    NotSymmetric,
    SizeMismatch,
    DegenerateParameters,
    NoSolution,
    NonUnique,
    ZeroBand,
    SingularBlock,
    SingularLeadingCoefficient,
    IrrationalMoments,
    DidNotStabilize,
    NotAnEigenfunction,
    RankDeficient,
    NotPolynomial,
    UnknownScenario,
    ParseError,
};

inline std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::DegenerateParameters: return "DegenerateParameters";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::NonUnique: return "NonUnique";
        case ErrorCode::ZeroBand: return "ZeroBand";
        case ErrorCode::SingularBlock: return "SingularBlock";
        case ErrorCode::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
        case ErrorCode::IrrationalMoments: return "IrrationalMoments";
        case ErrorCode::DidNotStabilize: return "DidNotStabilize";
        case ErrorCode::NotAnEigenfunction: return "NotAnEigenfunction";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::NotPolynomial: return "NotPolynomial";
        case ErrorCode::UnknownScenario: return "UnknownScenario";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so callers
/// (tests, CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace mvop

#endif  // MVOP_ERRORS_HPP
