#pragma once

#include <stdexcept>
#include <string>

namespace spc {

// Base for every error the library raises. The CLI maps all of these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidEdge : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class InvalidRole : public Error {
public:
    using Error::Error;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class UnknownVariant : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace spc
