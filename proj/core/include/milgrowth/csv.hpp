#pragma once

#include <string>
#include <vector>

namespace milgrowth {

/// Canonical number rendering for all emitted data: shortest form with
/// 9 significant digits ("%.9g"). Deterministic across runs.
std::string format_number(double value);

/// Minimal CSV assembler: header + rows, '\n' line endings, no quoting
/// (fields here are plain names and numbers).
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> fields);

    /// Header and every row joined with commas; trailing newline included.
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace milgrowth
