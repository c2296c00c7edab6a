#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace factorcrit {

enum class ErrorKind {
    MalformedEncoding,
    UnsupportedOrder,
    VertexOutOfRange,
    EdgeAbsent,
    EdgePresent,
    OrderTooSmall,
    LimitExceeded,
    ParityMismatch,
    KOutOfRange,
    NotCritical,
    NotMinimallyCritical,
    PreconditionUnmet,
    NotDeficient,
    NotRestorable,
    FamilyPreconditionUnmet,
    HypothesisUnmet,
    FileUnreadable,
    OrderTooLargeForGenerate,
    TheoremViolated,
};

inline auto error_kind_name(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::MalformedEncoding: return "MalformedEncoding";
        case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::EdgeAbsent: return "EdgeAbsent";
        case ErrorKind::EdgePresent: return "EdgePresent";
        case ErrorKind::OrderTooSmall: return "OrderTooSmall";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::ParityMismatch: return "ParityMismatch";
        case ErrorKind::KOutOfRange: return "KOutOfRange";
        case ErrorKind::NotCritical: return "NotCritical";
        case ErrorKind::NotMinimallyCritical: return "NotMinimallyCritical";
        case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
        case ErrorKind::NotDeficient: return "NotDeficient";
        case ErrorKind::NotRestorable: return "NotRestorable";
        case ErrorKind::FamilyPreconditionUnmet: return "FamilyPreconditionUnmet";
        case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
        case ErrorKind::FileUnreadable: return "FileUnreadable";
        case ErrorKind::OrderTooLargeForGenerate: return "OrderTooLargeForGenerate";
        case ErrorKind::TheoremViolated: return "TheoremViolated";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error
{
    public:
        Error(ErrorKind kind, const std::string & what) :
            std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
            _kind(kind)
        {
        }

        auto kind() const -> ErrorKind
        {
            return _kind;
        }

    private:
        ErrorKind _kind;
};

/**
 * Raised when a statement that is proven to hold fails on a concrete graph.
 * That means either an implementation bug or a counterexample, and sweeps
 * must stop rather than count it.
 */
class TheoremViolated : public Error
{
    public:
        TheoremViolated(std::string theorem, std::string graph6, const std::string & detail) :
            Error(ErrorKind::TheoremViolated, theorem + " on " + graph6 + ": " + detail),
            _theorem(std::move(theorem)),
            _graph6(std::move(graph6))
        {
        }

        auto theorem() const -> const std::string & { return _theorem; }
        auto graph6() const -> const std::string & { return _graph6; }

    private:
        std::string _theorem;
        std::string _graph6;
};

} // namespace factorcrit
