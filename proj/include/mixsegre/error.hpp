#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixsegre {

// Base for every error raised by the engine. `module()` names the component
// that raised it so the CLI can report provenance.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(what), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& what) : Error("algebra_kernel", what) {}
};

class InvalidArgument : public Error {
public:
    InvalidArgument(std::string module, const std::string& what) : Error(std::move(module), what) {}
};

class ResourceLimit : public Error {
public:
    ResourceLimit(std::string module, const std::string& what) : Error(std::move(module), what) {}
};

// Random combinations failed to behave generically after the retry budget.
class GenericityFailure : public Error {
public:
    explicit GenericityFailure(const std::string& what) : Error("segre_core", what) {}
};

class PreconditionFailed : public Error {
public:
    PreconditionFailed(std::string module, const std::string& what) : Error(std::move(module), what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("cli", "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace mixsegre
