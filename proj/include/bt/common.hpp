#pragma once

#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace bt {

// All numeric values are exact rationals; integer literals are rationals with
// denominator 1, and division never rounds (division by zero is simply
// outside the operator's domain).
using Rat = boost::rational<long long>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands of the wrong type, mixed-type unions, application of a non-set, ...
struct TypeError : Error {
    using Error::Error;
};

// Requested enumeration exceeds the configured bound (see BT_MAX_ENUM).
struct EnumerationError : Error {
    using Error::Error;
};

// Cardinality of the improper bunch is not a number.
struct UndefinedCardinality : Error {
    UndefinedCardinality() : Error("cardinality of the improper bunch is undefined") {}
};

// Deliberately unimplemented operation.
struct Unsupported : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t at) : Error(msg), pos(at) {}
};

// Unbound variable, missing declaration, bad directive — runtime evaluation faults.
struct EvalError : Error {
    using Error::Error;
};

std::string show(const Rat& r);

} // namespace bt
