#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace critlab {

/// Bad argument to an operation (edge not in graph, parameter out of range, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation is not supported at this graph size.
class UnsupportedSize : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// graph6 text could not be decoded. `offset()` is the byte that triggered it.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A line of a graph6 stream failed to decode. `line()` is 1-based.
class StreamError : public std::runtime_error {
public:
    StreamError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A step of the clique-bound argument failed on an input certified k-critical.
/// Carries the graph6 of the instance so it can be reproduced.
class FalsificationError : public std::runtime_error {
public:
    FalsificationError(const std::string& what, std::string graph6)
        : std::runtime_error(what + " on " + graph6), graph6_(std::move(graph6)) {}

    const std::string& graph6() const noexcept { return graph6_; }

private:
    std::string graph6_;
};

} // namespace critlab
