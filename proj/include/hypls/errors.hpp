#pragma once

#include <stdexcept>
#include <string>

namespace hypls {

enum class Err {
    EllipticElement,     // El003: |trace| < 2, word is not a geodesic
    NonPositiveLength,   // El004
    DegenerateQuadruple, // El005: repeated cross-ratio points
    OrderViolation,      // El006: cross ratio not negative
    SingularJacobian,    // El007
    BadLengthRule,       // ElO10: rule produced length <= 0
    EmptyCore,           // ElO11
    UnknownCurve,        // ElO12
    InfiniteInteraction, // ElC01: schedule meets a curve's support unboundedly
    UnsupportedPiece,    // ElC02: dual-curve piece is neither four-holed sphere nor one-holed torus
    NonHyperbolicInput,  // ElH01
    WordNotSupported,    // ElH02
    NotShort,            // ElH03: collar decomposition needs lengths < 0.1
    MixedRegime,         // ElM01
    BadEpsilon,          // ElM02
    GridTooCoarse,       // ElM03
    UnknownExperiment,   // ElX01
    BadParams,           // ElX02
};

inline const char* err_code(Err e) {
    switch (e) {
        case Err::EllipticElement: return "El003";
        case Err::NonPositiveLength: return "El004";
        case Err::DegenerateQuadruple: return "El005";
        case Err::OrderViolation: return "El006";
        case Err::SingularJacobian: return "El007";
        case Err::BadLengthRule: return "ElO10";
        case Err::EmptyCore: return "ElO11";
        case Err::UnknownCurve: return "ElO12";
        case Err::InfiniteInteraction: return "ElC01";
        case Err::UnsupportedPiece: return "ElC02";
        case Err::NonHyperbolicInput: return "ElH01";
        case Err::WordNotSupported: return "ElH02";
        case Err::NotShort: return "ElH03";
        case Err::MixedRegime: return "ElM01";
        case Err::BadEpsilon: return "ElM02";
        case Err::GridTooCoarse: return "ElM03";
        case Err::UnknownExperiment: return "ElX01";
        case Err::BadParams: return "ElX02";
    }
    return "El???";
}

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& what)
        : std::runtime_error(std::string(err_code(kind)) + " " + what), kind_(kind) {}

    Err kind() const { return kind_; }
    const char* code() const { return err_code(kind_); }

private:
    Err kind_;
};

} // namespace hypls
