// Copyright 2026 the cfp authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cfp {

// Error taxonomy shared by the library and the CLI. The CLI maps each class
// to a fixed exit code, so every failure mode is observable from scripts:
//   UsageError -> 64, ParseError -> 65, GuardError -> 70, DomainError -> 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad command line: unknown flag, missing argument, out-of-range option value.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

// Malformed input text (instance, solution, or edge-list file).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Explicit size/feasibility guard tripped (enumeration too large, weighted
// totals too big for exact 64-bit arithmetic, ...). Never a silent fallback.
class GuardError : public Error {
public:
    explicit GuardError(const std::string& what) : Error(what) {}
};

// Well-formed input outside an operation's domain: dimension mismatch,
// index out of range, undefined efficacy, inconsistent edit set, ...
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Unreadable input file; mapped to the same exit code as ParseError (65),
// both mean "the input could not be consumed".
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace cfp
