#pragma once

#include <stdexcept>
#include <string>

namespace cubedens
{
    /// Base class for all errors raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Arguments that violate an operation's preconditions (dimension mismatch, d > n, ...).
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    /// Malformed text input.
    class ParseError : public Error
    {
    public:
        using Error::Error;
    };

    /// A computation whose size exceeds what the exact routines will attempt.
    class ComputationRefused : public Error
    {
    public:
        using Error::Error;
    };
}
