#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

namespace ssa::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

/// Writes a report document. Table-shaped reports (a "rows" array of flat
/// objects) become one CSV/text line per row; everything else is written as
/// a single flat record with nested objects flattened to dotted keys and
/// arrays joined with ';'.
void write_report(std::ostream& out, const Json& report, Format format);

}  // namespace ssa::cli
