#pragma once

#include <stdexcept>
#include <string>

namespace finstoch {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
    public:
        explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Two spaces that were required to agree do not. */
class SpaceMismatch : public Error
{
    public:
        explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

/** A value violates a structural invariant (stochasticity, distinct labels, ...). */
class InvariantError : public Error
{
    public:
        explicit InvariantError(const std::string& what) : Error(what) {}
};

/** The hypotheses of an operation are not met by its arguments. */
class PreconditionError : public Error
{
    public:
        explicit PreconditionError(const std::string& what) : Error(what) {}
};

/** A state cannot be factored through an equalizer. */
class FactorizationError : public Error
{
    public:
        explicit FactorizationError(const std::string& what) : Error(what) {}
};

/**
 * A construction that must succeed whenever its preconditions hold has
 * produced an invalid result. Raising this is always a bug.
 */
class TheoremViolation : public Error
{
    public:
        explicit TheoremViolation(const std::string& what) : Error(what) {}
};

/** Text could not be parsed; carries a 1-based source position. */
class ParseError : public Error
{
    public:
        ParseError(const std::string& msg, std::size_t line, std::size_t column)
            : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
              line_(line), column_(column) {}

        std::size_t line() const { return line_; }
        std::size_t column() const { return column_; }

    private:
        std::size_t line_;
        std::size_t column_;
};

/** A well-formed diagram expression does not typecheck. */
class TypeError : public Error
{
    public:
        explicit TypeError(const std::string& what) : Error(what) {}
};

}   // namespace finstoch
