#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtuples {

// Failure conditions surfaced by the exact and numeric layers. Each value
// corresponds to one documented error of the public operations.
enum class Errc {
    // correspondence validation
    ZeroMatrix,
    DegenerateDegree,
    LineComponent,
    // exact linear algebra / factorization
    RankNotTwo,
    InternalNonreduced,
    // polynomial arithmetic
    BothZero,
    ZeroPolynomial,
    BadExponent,
    ZeroDenominator,
    // map composition
    DegreeMismatch,
    SingularMobius,
    // numeric oracle
    NumericallyZeroPolynomial,
    DegenerateFiber,
    LengthMismatch,
    DegenerateSample,
    TooManyDegenerateSamples,
    // serialization
    UnsupportedCoefficient,
    DegreeOverflow,
};

inline const char* errc_name(Errc e) {
    switch (e) {
        case Errc::ZeroMatrix: return "ZeroMatrix";
        case Errc::DegenerateDegree: return "DegenerateDegree";
        case Errc::LineComponent: return "LineComponent";
        case Errc::RankNotTwo: return "RankNotTwo";
        case Errc::InternalNonreduced: return "InternalNonreduced";
        case Errc::BothZero: return "BothZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::BadExponent: return "BadExponent";
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::SingularMobius: return "SingularMobius";
        case Errc::NumericallyZeroPolynomial: return "NumericallyZeroPolynomial";
        case Errc::DegenerateFiber: return "DegenerateFiber";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::DegenerateSample: return "DegenerateSample";
        case Errc::TooManyDegenerateSamples: return "TooManyDegenerateSamples";
        case Errc::UnsupportedCoefficient: return "UnsupportedCoefficient";
        case Errc::DegreeOverflow: return "DegreeOverflow";
    }
    return "UnknownError";
}

class DomainError : public std::runtime_error {
  public:
    DomainError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

// Parse failure; position is a 0-based byte offset into the source text.
class SyntaxError : public std::runtime_error {
  public:
    SyntaxError(std::size_t position, const std::string& what)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position),
          reason_(what) {}

    std::size_t position() const noexcept { return position_; }

    // bare message without the position prefix, for rethrowing at a
    // shifted offset
    const std::string& reason() const noexcept { return reason_; }

  private:
    std::size_t position_;
    std::string reason_;
};

}  // namespace dtuples
