#pragma once

#include <string>

#include "residua/poset.hpp"

namespace residua {

/// Parses the JSON poset format:
///   { "name": ..., "elements": [...], "covers": [[lo,hi],...], "op": {x: x', ...} }
RawPoset parse_poset_json(const std::string& text);

RawPoset load_poset_file(const std::string& path);

/// Serializes a structured poset back into the file format (covers are the
/// transitive reduction of the order).
std::string poset_to_json(const StructuredPoset& sp);

}  // namespace residua
