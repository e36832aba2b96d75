#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace seqgini {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An observation was negative, NaN, or infinite.
class InvalidObservationError : public Error {
public:
    using Error::Error;
};

/// A statistic was requested below its minimum sample size.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// The sample mean is zero, so the Gini index does not exist.
class UndefinedGiniError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration (alpha, d, replication count, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A finite observation source ran dry before the stopping rule fired.
class SourceExhaustedError : public Error {
public:
    SourceExhaustedError(const std::string& what, std::size_t observations_seen,
                         std::optional<double> unmet_threshold)
        : Error(what),
          observations_seen(observations_seen),
          unmet_threshold(unmet_threshold) {}

    std::size_t observations_seen;
    /// Last stopping boundary evaluated, if the pilot completed.
    std::optional<double> unmet_threshold;
};

/// The configurable hard cap on the stopping time was hit.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, std::size_t cap) : Error(what), cap(cap) {}

    std::size_t cap;
};

/// A data file could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string path, std::size_t line)
        : Error(what), path(std::move(path)), line(line) {}

    std::string path;
    std::size_t line;
};

/// A population moment required by the asymptotic theory does not exist.
class MomentExistenceError : public Error {
public:
    using Error::Error;
};

}  // namespace seqgini
