#pragma once

#include <stdexcept>
#include <string>

namespace cliffcanon {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatchError : Error {
    using Error::Error;
};

struct ZeroMatrixError : Error {
    using Error::Error;
};

struct NotSpdError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct InvalidClassSignError : Error {
    using Error::Error;
};

struct RankError : Error {
    using Error::Error;
};

struct RankMismatchError : Error {
    using Error::Error;
};

struct UnsupportedCError : Error {
    using Error::Error;
};

struct NotOrthonormalError : Error {
    using Error::Error;
};

struct NotInCommutantError : Error {
    using Error::Error;
};

struct ReducibleError : Error {
    using Error::Error;
};

struct RelationError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace cliffcanon
