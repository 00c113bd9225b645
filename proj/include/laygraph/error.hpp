#ifndef LAYGRAPH_ERROR_HPP
#define LAYGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace laygraph {

enum class ErrorKind {
    NonUnitConstantTerm,
    NotDivisible,
    OutOfRange,
    NotPrime,
    BottomLevelNotSingleton,
    ChainBudgetExceeded,
    EnumerationBudgetExceeded,
    Syntax,
    Graph,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

enum class GraphErrorKind {
    NoLevelZero,
    MultipleLevelZero,
    NonLayeredEdge,
    DanglingVertex,
    DuplicateId,
    UnknownEndpoint,
};

std::string_view to_string(GraphErrorKind kind) noexcept;

/// A violated layered-graph invariant. detail() names the offending id(s).
class GraphError : public Error {
public:
    GraphError(GraphErrorKind kind, std::string detail)
        : Error(ErrorKind::Graph, std::string(to_string(kind)) + ": " + detail),
          graph_kind_(kind),
          detail_(std::move(detail)) {}

    GraphErrorKind graph_kind() const noexcept { return graph_kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    GraphErrorKind graph_kind_;
    std::string detail_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::BottomLevelNotSingleton: return "BottomLevelNotSingleton";
        case ErrorKind::ChainBudgetExceeded: return "ChainBudgetExceeded";
        case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case ErrorKind::Syntax: return "Syntax";
        case ErrorKind::Graph: return "GraphError";
    }
    return "Unknown";
}

inline std::string_view to_string(GraphErrorKind kind) noexcept {
    switch (kind) {
        case GraphErrorKind::NoLevelZero: return "NoLevelZero";
        case GraphErrorKind::MultipleLevelZero: return "MultipleLevelZero";
        case GraphErrorKind::NonLayeredEdge: return "NonLayeredEdge";
        case GraphErrorKind::DanglingVertex: return "DanglingVertex";
        case GraphErrorKind::DuplicateId: return "DuplicateId";
        case GraphErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    }
    return "Unknown";
}

}  // namespace laygraph

#endif  // LAYGRAPH_ERROR_HPP
