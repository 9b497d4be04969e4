// csvio.hpp — CSV with '#' metadata headers, 17-significant-digit round trip

#pragma once

#include <string>
#include <vector>

namespace qzeno::csv {

struct Column {
    std::string name;
    std::vector<double> values;
};

struct Table {
    std::vector<std::string> comments; // emitted as "# ..." lines, in order
    std::vector<Column> columns;       // equal lengths
};

// Writes comments, a header row of column names, then comma-separated rows
// formatted with %.17g ('.' decimal point, bit-exact re-parse).
void write(const std::string& path, const Table& table);

Table read(const std::string& path);

std::string format_double(double v);

} // namespace qzeno::csv
