#include "routelab/error.hpp"

namespace routelab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::BridgeRemoval: return "BridgeRemoval";
        case ErrorKind::NonPositiveScale: return "NonPositiveScale";
        case ErrorKind::UnknownEdge: return "UnknownEdge";
        case ErrorKind::ForeignTree: return "ForeignTree";
        case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::NotUnicyclic: return "NotUnicyclic";
        case ErrorKind::NoEligibleEdge: return "NoEligibleEdge";
        case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
        case ErrorKind::UnknownCase: return "UnknownCase";
        case ErrorKind::UnknownName: return "UnknownName";
    }
    return "Unknown";
}

}  // namespace routelab
