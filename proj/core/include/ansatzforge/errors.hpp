#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ansatzforge {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Qubit counts, register sizes or dimensions out of the supported range.
class SizeError : public Error {
public:
    using Error::Error;
};

/// A symbolic parameter was missing from (or unexpected in) a binding.
class BindingError : public Error {
public:
    using Error::Error;
};

/// Invalid gate targets: out of range or duplicated.
class TargetError : public Error {
public:
    using Error::Error;
};

/// A classical condition refers to a measurement that has not happened yet.
class OrderingError : public Error {
public:
    using Error::Error;
};

/// A circuit element has no representation in the requested export format.
class ExportError : public Error {
public:
    using Error::Error;
};

/// Unknown registry key; carries the list of valid names for diagnostics.
class LookupError : public Error {
public:
    LookupError(const std::string& what, std::vector<std::string> valid)
        : Error(what), valid_names(std::move(valid)) {}
    std::vector<std::string> valid_names;
};

/// Malformed user input (manifests, config files, graph JSON, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Non-finite values during optimization; carries the partial value trace.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, std::vector<double> partial)
        : Error(what), partial_trace(std::move(partial)) {}
    std::vector<double> partial_trace;
};

/// Requested gradient of a gate without a two-term shift rule.
class UnsupportedGateError : public Error {
public:
    using Error::Error;
};

} // namespace ansatzforge
