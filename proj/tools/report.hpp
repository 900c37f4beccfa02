#pragma once

// Row/column result container for the command-line tool. Written as CSV or
// JSON (chosen by file extension) or as an aligned text table on stdout.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qineq/errors.hpp"

namespace qineq::cli {

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) {
        if (row.size() != columns.size()) throw std::logic_error("Report: row width mismatch");
        rows.push_back(std::move(row));
    }
};

inline std::string format_cell(const Cell& c, int precision) {
    return std::visit(
        [precision](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                if (std::isnan(v)) return "nan";
                if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
                std::ostringstream os;
                os << std::setprecision(precision) << v;
                return os.str();
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return v;
            }
        },
        c);
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& os, const Report& r) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_escape(r.columns[i]);
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(format_cell(row[i], 12));
        os << '\n';
    }
}

inline nlohmann::json to_json(const Report& r) {
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(v))
                            obj[r.columns[i]] = v;
                        else
                            obj[r.columns[i]] = format_cell(v, 12);  // JSON has no inf/nan
                    } else {
                        obj[r.columns[i]] = v;
                    }
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

inline void write_text(std::ostream& os, const Report& r) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
    for (const auto& row : r.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(format_cell(row[i], 6));
            width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) os << "  ";
            os << std::setw(static_cast<int>(width[i])) << line[i];
        }
        os << '\n';
    };
    emit(r.columns);
    for (const auto& line : cells) emit(line);
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Writes to `path` (format from the .csv/.json extension) or, when path is
/// empty, prints an aligned table to stdout.
inline void emit(const Report& r, const std::string& path) {
    if (path.empty()) {
        write_text(std::cout, r);
        return;
    }
    const bool json = ends_with(path, ".json");
    if (!json && !ends_with(path, ".csv"))
        throw parse_error("--out: unsupported extension for '" + path + "' (use .csv or .json)");
    std::ofstream out(path);
    if (!out) throw parse_error("--out: cannot write '" + path + "'");
    if (json)
        out << to_json(r).dump(2) << '\n';
    else
        write_csv(out, r);
}

}  // namespace qineq::cli
