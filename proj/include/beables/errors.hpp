#pragma once

#include <stdexcept>
#include <string>

namespace beables {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSquare : Error {
    using Error::Error;
};
struct NotSelfAdjoint : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotProjection : Error {
    using Error::Error;
};
struct NotEigenbasis : Error {
    using Error::Error;
};
struct IncompleteBasis : Error {
    using Error::Error;
};
struct NotMember : Error {
    using Error::Error;
};
struct NotClassical : Error {
    using Error::Error;
};
struct BadDimension : Error {
    using Error::Error;
};
struct DuplicateId : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};

// Raised when two independent computations of the same object disagree.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace beables
