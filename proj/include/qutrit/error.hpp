#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qutrit {

enum class Errc {
    not_hermitian,
    trace_not_one,
    inconsistent_params,
    metric_undefined,
    not_positive,
    invalid_state,
    not_symmetric_state,
    degenerate_mesh,
    not_normalized,
    out_of_ball,
    invalid_argument,
    parse_error,
    io,
    internal,
};

inline std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::not_hermitian: return "NotHermitian";
        case Errc::trace_not_one: return "TraceNotOne";
        case Errc::inconsistent_params: return "InconsistentParams";
        case Errc::metric_undefined: return "MetricUndefined";
        case Errc::not_positive: return "NotPositive";
        case Errc::invalid_state: return "InvalidState";
        case Errc::not_symmetric_state: return "NotSymmetricState";
        case Errc::degenerate_mesh: return "DegenerateMesh";
        case Errc::not_normalized: return "NotNormalized";
        case Errc::out_of_ball: return "OutOfBall";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::parse_error: return "ParseError";
        case Errc::io: return "IoError";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

    Errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace qutrit
