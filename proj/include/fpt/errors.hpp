#pragma once

#include <stdexcept>
#include <string>

namespace fpt {

// Violated precondition or malformed argument (caller bug, not data size).
struct ContractError : std::invalid_argument {
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap was exceeded (vertex count, grid cells, work units).
// Message names the offending quantity and the cap.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// A table-only growth function was asked for values beyond its table.
struct TableHorizonError : std::runtime_error {
    explicit TableHorizonError(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-facing input (CLI token, JSON document). `where` is a JSON-pointer-ish
// locator when the input was a structured document, empty otherwise.
struct ParseError : std::runtime_error {
    std::string where;
    ParseError(const std::string& what, std::string where_ = "")
        : std::runtime_error(where_.empty() ? what : what + " (at " + where_ + ")"),
          where(std::move(where_)) {}
};

}  // namespace fpt
