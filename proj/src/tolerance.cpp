#include "pentagram/tolerance.hpp"
#include "pentagram/error.hpp"

#include <atomic>

namespace pentagram {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tol) {
    if (!(tol > 0.0))
        throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
    g_tolerance.store(tol, std::memory_order_relaxed);
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::CoincidentLines: return "CoincidentLines";
        case ErrorCode::PointAtInfinity: return "PointAtInfinity";
        case ErrorCode::KernelHit: return "KernelHit";
        case ErrorCode::SingularMap: return "SingularMap";
        case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
        case ErrorCode::VertexOnChartLine: return "VertexOnChartLine";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::DegenerateConic: return "DegenerateConic";
        case ErrorCode::CenterAtInfinity: return "CenterAtInfinity";
        case ErrorCode::NoInteriorFixedPoint: return "NoInteriorFixedPoint";
        case ErrorCode::AmbiguousFixedPoint: return "AmbiguousFixedPoint";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ConvexityLost: return "ConvexityLost";
        case ErrorCode::DegenerateOrbit: return "DegenerateOrbit";
        case ErrorCode::MaxIterationsExceeded: return "MaxIterationsExceeded";
        case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

} // namespace pentagram
