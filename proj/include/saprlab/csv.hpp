#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "saprlab/errors.hpp"

namespace saprlab {

// Compact numeric formatting for CSV cells: integers print bare, everything
// else with enough digits to round-trip visually.
inline std::string csv_num(double v) {
    char buf[40];
    if (v == static_cast<long long>(v) && v > -1e15 && v < 1e15)
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    else
        std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline void write_csv(const std::string& path, const std::string& header,
                      const std::vector<std::string>& rows) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write CSV: " + path);
    out << header << "\n";
    for (const auto& row : rows) out << row << "\n";
    if (!out.good()) throw DataError("write failed: " + path);
}

}  // namespace saprlab
