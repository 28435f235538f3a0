#pragma once

#include <stdexcept>
#include <string>

namespace stressforge {

enum class ErrorKind {
    DimensionMismatch,
    UnsupportedDimension,
    BadPrime,
    DegeneratePosition,
    DegenerateSubset,
    NonCoplanar,
    GraphMismatch,
    IdenticalInput,
    DuplicateLine,
    DegenerateConstruction,
    CapExceeded,
    EmptySample,
    InvalidSample,
    NotNormalizable,
    DeeperDegeneracy,
    UnsupportedN,
    ZeroStressOnEdge,
    CollinearityPrecondition,
    UndefinedIntersection,
    DegeneratePlane,
    NonPointIntersection,
    SiteMismatch,
    Schema,
    FloatRejected,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
        case ErrorKind::BadPrime: return "bad-prime";
        case ErrorKind::DegeneratePosition: return "degenerate-position";
        case ErrorKind::DegenerateSubset: return "degenerate-subset";
        case ErrorKind::NonCoplanar: return "non-coplanar";
        case ErrorKind::GraphMismatch: return "graph-mismatch";
        case ErrorKind::IdenticalInput: return "identical-input";
        case ErrorKind::DuplicateLine: return "duplicate-line";
        case ErrorKind::DegenerateConstruction: return "degenerate-construction";
        case ErrorKind::CapExceeded: return "cap-exceeded";
        case ErrorKind::EmptySample: return "empty-sample";
        case ErrorKind::InvalidSample: return "invalid-sample";
        case ErrorKind::NotNormalizable: return "not-normalizable";
        case ErrorKind::DeeperDegeneracy: return "deeper-degeneracy";
        case ErrorKind::UnsupportedN: return "unsupported-n";
        case ErrorKind::ZeroStressOnEdge: return "zero-stress-on-edge";
        case ErrorKind::CollinearityPrecondition: return "collinearity-precondition";
        case ErrorKind::UndefinedIntersection: return "undefined-intersection";
        case ErrorKind::DegeneratePlane: return "degenerate-plane";
        case ErrorKind::NonPointIntersection: return "non-point-intersection";
        case ErrorKind::SiteMismatch: return "site-mismatch";
        case ErrorKind::Schema: return "schema";
        case ErrorKind::FloatRejected: return "float-rejected";
        case ErrorKind::Io: return "io";
        }
        return "unknown";
    }

private:
    ErrorKind kind_;
};

} // namespace stressforge
