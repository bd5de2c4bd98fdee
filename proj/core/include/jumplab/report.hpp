#pragma once

// Tabular experiment reports: named columns, string cells (exact values
// as rational strings, estimates as decimals), ordered metadata. CSV for
// golden-file comparisons, JSON for full metadata. Serialization is
// deterministic: equal reports produce equal bytes.

#include <string>
#include <utility>
#include <vector>

namespace jumplab {

struct ScanReport {
    std::string experiment;   // subcommand-style name, e.g. "nondoubling"
    std::string provenance;   // opaque tag exported as the "paper_ref" field
    std::vector<std::pair<std::string, std::string>> metadata;  // ordered
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_meta(std::string key, std::string value) {
        metadata.emplace_back(std::move(key), std::move(value));
    }
    void add_row(std::vector<std::string> row);

    // Header + rows. Cells containing separators or quotes are quoted
    // with doubled inner quotes. Rows end in '\n'.
    std::string to_csv() const;

    // {"experiment", "paper_ref", "metadata", "columns", "rows"}.
    std::string to_json(int indent = 2) const;
};

// One field, CSV-escaped.
std::string csv_quote(const std::string& cell);

} // namespace jumplab
