#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Deterministic CSV plumbing: full double precision, '.' decimal separator,
// header row first.  parse_csv(emit_csv(rows)) reproduces rows exactly.

namespace ngas {
namespace io {

// Shortest representation with up to 17 significant digits; round-trips
// every finite double.
inline std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

using CsvRow = std::vector<std::string>;
using CsvTable = std::vector<CsvRow>;

inline std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

inline std::string emit_csv(const CsvRow& header, const CsvTable& rows) {
    std::string out;
    auto append_row = [&out](const CsvRow& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(row[i]);
        }
        out += '\n';
    };
    append_row(header);
    for (const auto& row : rows) append_row(row);
    return out;
}

inline CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    CsvRow row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"': quoted = true; any = true; break;
        case ',':
            row.push_back(field);
            field.clear();
            any = true;
            break;
        case '\n':
            if (any || !field.empty() || !row.empty()) {
                row.push_back(field);
                table.push_back(row);
            }
            field.clear();
            row.clear();
            any = false;
            break;
        case '\r': break;
        default: field += c; any = true; break;
        }
    }
    if (any || !field.empty() || !row.empty()) {
        row.push_back(field);
        table.push_back(row);
    }
    return table;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace io
}  // namespace ngas
