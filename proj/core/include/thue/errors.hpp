// errors.hpp -- exception types shared by the thue libraries

#pragma once

#include <stdexcept>
#include <string>

namespace thue {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A (track, color) pair outside the seven-letter alphabet.
class InvalidLetter : public Error
{
public:
    using Error::Error;
};

/// Malformed text input (letter tokens, word files, traces).
class ParseError : public Error
{
public:
    using Error::Error;
};

/// Out-of-range index into the tau stream.
class IndexError : public Error
{
public:
    using Error::Error;
};

/// Strategy used before initialisation or with an impossible state.
class StateError : public Error
{
public:
    using Error::Error;
};

/// Input violating an operation's documented precondition.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// A replayed trace disagrees with the moves recomputed by the strategy.
class DivergenceError : public Error
{
public:
    using Error::Error;
};

/// Requested search exceeds the configured node budget.
class DepthError : public Error
{
public:
    using Error::Error;
};

} // namespace thue
