#pragma once

#include "ap5/integer.hpp"

#include <json.hpp>

#include <string>

namespace ap5 {

using json = nlohmann::json;

/// Parses JSON text keeping integers that overflow 64 bits exact: such
/// literals are stored as tagged strings and read back through json_to_int.
/// Throws SchemaError with the byte offset on malformed input.
[[nodiscard]] json parse_json_exact(const std::string& text);

/// Integer value of a number node (or of a big-integer literal captured by
/// parse_json_exact). Throws SchemaError naming `where` otherwise.
[[nodiscard]] Int json_to_int(const json& j, const std::string& where);

/// Also accepts decimal digit strings, as some services send large values quoted.
[[nodiscard]] Int json_to_int_lenient(const json& j, const std::string& where);

/// Reads a whole file; throws SchemaError if it cannot be opened.
[[nodiscard]] std::string read_text_file(const std::string& path);

/// Writes through a temporary file in the same directory and renames it into place.
void write_text_file_atomic(const std::string& path, const std::string& text);

}  // namespace ap5
