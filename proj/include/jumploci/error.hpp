/*
   Copyright 2026 The jumploci Authors

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

#ifndef JUMPLOCI_ERROR_HPP
#define JUMPLOCI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace jumploci {

enum class ErrorKind {
    DivisionByZero,
    ZeroPolynomial,
    VariableMismatch,
    DimensionMismatch,
    RankTooLarge,
    SizeLimit,
    IndexOutOfRange,
    InvalidCharacter,
    InvalidOneForm,
    SpecMismatch,
    DegenerateCurve,
    NotALift,
    NotOnTorus,
    ParseError,
    UnknownGenerator,
    EmptyGeneratorList,
    RowCountMismatch,
    RankDeficientSpec,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::RankTooLarge: return "RankTooLarge";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidCharacter: return "InvalidCharacter";
        case ErrorKind::InvalidOneForm: return "InvalidOneForm";
        case ErrorKind::SpecMismatch: return "SpecMismatch";
        case ErrorKind::DegenerateCurve: return "DegenerateCurve";
        case ErrorKind::NotALift: return "NotALift";
        case ErrorKind::NotOnTorus: return "NotOnTorus";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::EmptyGeneratorList: return "EmptyGeneratorList";
        case ErrorKind::RowCountMismatch: return "RowCountMismatch";
        case ErrorKind::RankDeficientSpec: return "RankDeficientSpec";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace jumploci

#endif
