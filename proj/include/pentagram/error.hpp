#pragma once

#include <stdexcept>
#include <string>

namespace pentagram {

enum class ErrorCode {
    InvalidInput,
    CoincidentPoints,
    CoincidentLines,
    PointAtInfinity,
    KernelHit,
    SingularMap,
    DegeneratePolygon,
    VertexOnChartLine,
    DegenerateConfiguration,
    DegenerateConic,
    CenterAtInfinity,
    NoInteriorFixedPoint,
    AmbiguousFixedPoint,
    NoConvergence,
    ConvexityLost,
    DegenerateOrbit,
    MaxIterationsExceeded,
    ExhaustedAttempts,
    InternalInconsistency,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace pentagram
