#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace manakit {

// Decimal rendering used in every CSV we emit: 17 significant digits, enough
// to round-trip an IEEE double exactly.
inline std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

inline std::string csv_long(long long v) { return std::to_string(v); }

// A fully-rendered table: header plus string cells, written as UTF-8 CSV with
// one header row. Kept in memory so tests can assert on values without
// reparsing files.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::vector<std::string>& add_row() {
        rows.emplace_back();
        rows.back().reserve(header.size());
        return rows.back();
    }

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }

    void write(std::ostream& os) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            os << header[i] << (i + 1 < header.size() ? "," : "");
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? "," : "");
            os << '\n';
        }
    }
};

}  // namespace manakit
