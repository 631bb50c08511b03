#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hrank {

/// Base class for all hrank errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: path expressions, TSV/JSON files, bundle files.
/// Carries a position (byte offset for expressions, line number for files;
/// 0 when not applicable).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos = 0)
        : Error(msg), position(pos) {}
    std::size_t position;
};

/// Structurally valid input that violates the network schema: unknown
/// types/relations, dangling endpoints, constraints that cannot bind.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace hrank
