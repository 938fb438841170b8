#include "milgrowth/csv.hpp"

#include "milgrowth/errors.hpp"

#include <cstdio>

namespace milgrowth {

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) {
        throw ValidationError("csv.header", "must have at least one column");
    }
}

void CsvTable::add_row(std::vector<std::string> fields) {
    if (fields.size() != header_.size()) {
        throw ValidationError("csv.row", "field count does not match the header");
    }
    rows_.push_back(std::move(fields));
}

std::string CsvTable::str() const {
    std::string out;
    auto append_line = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) out += ',';
            out += fields[i];
        }
        out += '\n';
    };
    append_line(header_);
    for (const auto& row : rows_) {
        append_line(row);
    }
    return out;
}

} // namespace milgrowth
