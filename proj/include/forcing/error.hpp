#pragma once

#include <stdexcept>
#include <string>

namespace forcing
{
    /// Base of every error thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// A sequence with repeated entries, an element outside the universe, or similar.
    class InvalidCondition : public Error
    {
    public:
        using Error::Error;
    };

    /// Operation would produce a condition longer than the universe's length cap
    /// or needs more elements than the universe has.
    class CapExceeded : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// An exhaustive run would exceed its EnumerationBudget.
    class BudgetExceeded : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed JSON input (schema mismatch, not syntax only).
    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    /// A checked invariant of a construction failed. Always an implementation bug.
    class InvariantViolation : public Error
    {
    public:
        using Error::Error;
    };

    /// A strategy returned something that does not extend its input.
    class ContractBreach : public Error
    {
    public:
        using Error::Error;
    };

    /// A player's queue (fresh elements, holes, vertices) ran dry. Games halt on it.
    class QueueExhausted : public Error
    {
    public:
        using Error::Error;
    };

    /// A search that must succeed by theory found nothing within its budget.
    class SearchExhausted : public Error
    {
    public:
        using Error::Error;
    };
}
