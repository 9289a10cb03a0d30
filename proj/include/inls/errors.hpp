// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace inls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration / input problems (CLI exit code 1).
struct ConfigError : Error {
    using Error::Error;
};

// A numerical guard tripped during evolution (CLI exit code 2).
struct GuardError : Error {
    enum class Kind { BoundaryContamination, SpectralTail, Overflow };
    GuardError(Kind k, double when, const std::string& msg) : Error(msg), kind(k), t(when) {}
    Kind kind;
    double t;
};

inline const char* guard_kind_name(GuardError::Kind k) {
    switch (k) {
        case GuardError::Kind::BoundaryContamination: return "BoundaryContamination";
        case GuardError::Kind::SpectralTail: return "SpectralTail";
        case GuardError::Kind::Overflow: return "Overflow";
    }
    return "?";
}

struct BadSize : Error {
    using Error::Error;
};
struct BadExponent : Error {
    using Error::Error;
};
struct TailTooFat : Error {
    using Error::Error;
};
struct ZeroTime : Error {
    using Error::Error;
};
struct NonUniform : Error {
    using Error::Error;
};
struct WindowTooShort : Error {
    using Error::Error;
};
struct WrongRegime : Error {
    using Error::Error;
};
struct NotAdmissible : Error {
    using Error::Error;
};
struct QOutOfRange : Error {
    using Error::Error;
};
struct HorizonExceeded : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace inls
