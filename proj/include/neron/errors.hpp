#pragma once

#include <stdexcept>
#include <string>

namespace neron {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid user input (bad JSON, failed validation).
class InvalidGraph : public Error {
public:
    using Error::Error;
};

/// A parameter index outside 1..num_params, or an empty parameter set.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Brute-force routines refuse inputs above their size limit.
class SizeLimitExceeded : public Error {
public:
    using Error::Error;
};

/// A loop whose label involves two or more parameters: no regular nodal
/// model can be reached by blowing up.
class NotDisciplined : public Error {
public:
    explicit NotDisciplined(std::string edge_id)
        : Error("edge '" + edge_id + "' is a loop with mixed-support label"),
          edge_id_(std::move(edge_id)) {}

    const std::string& edge_id() const noexcept { return edge_id_; }

private:
    std::string edge_id_;
};

/// An always-true invariant failed. Signals a bug, never bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace neron
