#pragma once

#include <stdexcept>
#include <string>

namespace rescurv {

/// Invalid arguments, malformed input files, or violated operation
/// preconditions (disconnected graph, non-normalized weights, ...).
class ParameterError : public std::runtime_error {
public:
    explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured enumeration or iteration cap was exceeded. The message
/// names the cap.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed: two independent computation routes
/// disagreed, or a certified identity did not hold. Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace rescurv
