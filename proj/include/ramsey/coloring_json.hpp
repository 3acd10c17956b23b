#pragma once

#include "ramsey/graph.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace ramsey {

using ordered_json = nlohmann::ordered_json;

/// {"host":{"kind":"complete","n":N} | {"kind":"bipartite","a":A,"b":B},
///  "k":K, "edges":[[u,v,c],...]} with edges in canonical host order.
ordered_json coloring_to_json(const EdgeColoring& coloring);

/// Compact single-line text of coloring_to_json. Parsing this text and
/// emitting again reproduces it byte for byte.
std::string coloring_to_text(const EdgeColoring& coloring);

/// Validates a parsed document against the schema. Extra witness header
/// fields (theorem, params, targets, claimed_value, verification) are
/// accepted and ignored; anything else is a ParseError naming the field.
EdgeColoring coloring_from_json(const ordered_json& doc);

/// Parses text; syntax errors report line and column.
EdgeColoring coloring_from_text(std::string_view text);

/// Parses JSON text into a document, reporting syntax errors with line and
/// column.
ordered_json parse_json_text(std::string_view text);

} // namespace ramsey
