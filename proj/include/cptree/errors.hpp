#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cptree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `position` is a 1-based line number for edge lists
/// and a 1-based byte offset for GML.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SelfLoop : public Error {
public:
    explicit SelfLoop(const std::string& label)
        : Error("self-loop on vertex '" + label + "'"), label_(label) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

/// A GML edge references a node id that was never declared.
class UnknownEndpoint : public ParseError {
public:
    UnknownEndpoint(std::size_t position, const std::string& label)
        : ParseError(position, "edge references undeclared node '" + label + "'") {}
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& label)
        : Error("unknown vertex '" + label + "'") {}
};

/// A configured enumeration cap was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; indicates a bug upstream.
class Inconsistent : public Error {
public:
    using Error::Error;
};

}  // namespace cptree
