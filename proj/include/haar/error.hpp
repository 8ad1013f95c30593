#pragma once

#include <stdexcept>
#include <string>

namespace haar {

/// Malformed textual input (group specs, hex masks, cycle notation, JSON matrices).
class ParseError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// A hard search/enumeration cap was exceeded. Never silently truncated.
class CapExceeded : public std::length_error
{
public:
  using std::length_error::length_error;
};

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace haar
