#include <jumplab/report.hpp>

#include <jumplab/errors.hpp>

#include <json.hpp>

#include <sstream>

namespace jumplab {

void ScanReport::add_row(std::vector<std::string> row) {
    require(row.size() == columns.size(),
            "report row width " + std::to_string(row.size()) + " does not match " +
                std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (const char c : cell) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string ScanReport::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ',';
        out << csv_quote(columns[i]);
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_quote(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string ScanReport::to_json(int indent) const {
    nlohmann::ordered_json doc;
    doc["experiment"] = experiment;
    doc["paper_ref"] = provenance;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [key, value] : metadata) meta[key] = value;
    doc["metadata"] = std::move(meta);
    doc["columns"] = columns;
    doc["rows"] = rows;
    return doc.dump(indent) + "\n";
}

} // namespace jumplab
