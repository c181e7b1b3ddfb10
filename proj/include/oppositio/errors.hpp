#pragma once

#include <stdexcept>
#include <string>

namespace oppositio {

// 1-based position inside a source file.
struct SourcePosition {
    int line = 1;
    int column = 1;
    bool operator==(const SourcePosition&) const = default;
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A name does not resolve, or a value breaks a structural invariant.
class DomainError : public Error {
public:
    using Error::Error;
};

// Structure exceeds the exact world-enumeration bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

// An operation needs admissible worlds but the structure has none.
class UnsatisfiableError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(SourcePosition pos, std::string expected_, std::string found_)
        : Error("parse error at " + std::to_string(pos.line) + ":" +
                std::to_string(pos.column) + ": expected " + expected_ +
                ", found " + found_),
          position(pos),
          expected(std::move(expected_)),
          found(std::move(found_)) {}

    SourcePosition position;
    std::string expected;
    std::string found;
};

// Grammatically fine but meaningless: duplicate ids, dangling references,
// cyclic superiority, wrong arrow for a relation kind.
class SemanticError : public Error {
public:
    SemanticError(SourcePosition pos, const std::string& message)
        : Error("error at " + std::to_string(pos.line) + ":" +
                std::to_string(pos.column) + ": " + message),
          position(pos) {}

    SourcePosition position;
};

// Problem while ingesting a debate directory; carries the offending file
// and, for line-oriented files, the record's line number.
class LoadError : public Error {
public:
    LoadError(std::string file_, const std::string& message)
        : Error(file_ + ": " + message), file(std::move(file_)) {}

    LoadError(std::string file_, long record_, const std::string& message)
        : Error(file_ + ":" + std::to_string(record_) + ": " + message),
          file(std::move(file_)),
          record(record_) {}

    std::string file;
    long record = -1;
};

}  // namespace oppositio
