#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ssa::cli {
namespace {

std::string scalar_text(const Json& value) {
  if (value.is_null()) {
    return "";
  }
  if (value.is_string()) {
    return value.get<std::string>();
  }
  if (value.is_array()) {
    std::string joined;
    for (const Json& item : value) {
      if (!joined.empty()) {
        joined += ';';
      }
      joined += scalar_text(item);
    }
    return joined;
  }
  return value.dump();
}

void flatten(const Json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& fields) {
  for (const auto& [key, item] : value.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (item.is_object()) {
      flatten(item, name, fields);
    } else {
      fields.emplace_back(name, scalar_text(item));
    }
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + '"';
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    out << (k ? "," : "") << csv_escape(cells[k]);
  }
  out << '\n';
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void write_report(std::ostream& out, const Json& report, Format format) {
  if (format == Format::json) {
    out << report.dump(2) << '\n';
    return;
  }

  const bool tabular = report.contains("rows") && report["rows"].is_array();
  if (tabular) {
    const Json& rows = report["rows"];
    std::vector<std::string> header;
    if (!rows.empty()) {
      for (const auto& [key, item] : rows.front().items()) {
        header.push_back(key);
      }
    }
    if (format == Format::csv) {
      write_csv_line(out, header);
      for (const Json& row : rows) {
        std::vector<std::string> cells;
        for (const std::string& key : header) {
          cells.push_back(scalar_text(row.at(key)));
        }
        write_csv_line(out, cells);
      }
      return;
    }
    std::vector<std::vector<std::string>> lines{header};
    for (const Json& row : rows) {
      std::vector<std::string> cells;
      for (const std::string& key : header) {
        cells.push_back(scalar_text(row.at(key)));
      }
      lines.push_back(std::move(cells));
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& line : lines) {
      for (std::size_t k = 0; k < line.size(); ++k) {
        widths[k] = std::max(widths[k], line[k].size());
      }
    }
    for (const auto& line : lines) {
      for (std::size_t k = 0; k < line.size(); ++k) {
        out << std::left << std::setw(static_cast<int>(widths[k] + 2)) << line[k];
      }
      out << '\n';
    }
    return;
  }

  std::vector<std::pair<std::string, std::string>> fields;
  flatten(report, "", fields);
  if (format == Format::csv) {
    std::vector<std::string> keys;
    std::vector<std::string> values;
    for (auto& [key, value] : fields) {
      keys.push_back(key);
      values.push_back(value);
    }
    write_csv_line(out, keys);
    write_csv_line(out, values);
    return;
  }
  // Results first, the echoed configuration last.
  for (const bool config_pass : {false, true}) {
    for (const auto& [key, value] : fields) {
      if ((key.rfind("config.", 0) == 0) == config_pass) {
        out << key << ": " << value << '\n';
      }
    }
  }
}

}  // namespace ssa::cli
