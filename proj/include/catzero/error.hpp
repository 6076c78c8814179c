#ifndef CATZERO_ERROR_HPP
#define CATZERO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace catzero {

enum class Errc {
    CycleDetected,
    ComparableInconsistentPair,
    CommonUpperBound,
    UnknownElement,
    DuplicateElement,
    TooLarge,
    HasInconsistentPairs,
    NotAcyclic,
    InvalidHalfspaceSystem,
    InconsistentVertex,
    InvalidPoint,
    InvalidCube,
    InvalidFrame,
    NotValid,
    DegenerateLeg,
    NotClosed,
    ParseError,
};

inline std::string_view errc_name(Errc code) {
    switch (code) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::ComparableInconsistentPair: return "ComparableInconsistentPair";
    case Errc::CommonUpperBound: return "CommonUpperBound";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::TooLarge: return "TooLarge";
    case Errc::HasInconsistentPairs: return "HasInconsistentPairs";
    case Errc::NotAcyclic: return "NotAcyclic";
    case Errc::InvalidHalfspaceSystem: return "InvalidHalfspaceSystem";
    case Errc::InconsistentVertex: return "InconsistentVertex";
    case Errc::InvalidPoint: return "InvalidPoint";
    case Errc::InvalidCube: return "InvalidCube";
    case Errc::InvalidFrame: return "InvalidFrame";
    case Errc::NotValid: return "NotValid";
    case Errc::DegenerateLeg: return "DegenerateLeg";
    case Errc::NotClosed: return "NotClosed";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace catzero

#endif // CATZERO_ERROR_HPP
