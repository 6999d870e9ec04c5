#ifndef FMC_ERRORS_HPP
#define FMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fmc {

enum class Errc {
    NotPrime,
    DegreeTooLarge,
    ContextMismatch,
    DivisionByZero,
    SingularModel,
    PointNotOnCurve,
    NotFoundWithinTower,
    TableMismatch,
    UnsupportedMixedOrder,
    OrderTooSmall,
    NoEllipticFibration,
    InconsistentDescriptor,
    Internal,
};

/// Domain error carrying a machine-readable code. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SingularModel: return "SingularModel";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::NotFoundWithinTower: return "NotFoundWithinTower";
    case Errc::TableMismatch: return "TableMismatch";
    case Errc::UnsupportedMixedOrder: return "UnsupportedMixedOrder";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::NoEllipticFibration: return "NoEllipticFibration";
    case Errc::InconsistentDescriptor: return "InconsistentDescriptor";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

} // namespace fmc

#endif
