// csvio.cpp

#include "qzeno/csvio.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qzeno::csv {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write(const std::string& path, const Table& table)
{
    if (table.columns.empty())
        throw std::invalid_argument("csv::write: no columns");
    const std::size_t n = table.columns.front().values.size();
    for (const auto& c : table.columns)
        if (c.values.size() != n)
            throw std::invalid_argument("csv::write: ragged columns");

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("csv::write: cannot open " + path);
    for (const auto& c : table.comments)
        out << "# " << c << "\n";
    for (std::size_t j = 0; j < table.columns.size(); ++j)
        out << (j ? "," : "") << table.columns[j].name;
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < table.columns.size(); ++j)
            out << (j ? "," : "") << format_double(table.columns[j].values[i]);
        out << "\n";
    }
    if (!out)
        throw std::runtime_error("csv::write: write failed for " + path);
}

Table read(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("csv::read: cannot open " + path);
    Table t;
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
            t.comments.push_back(line.substr(start));
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        if (!header_done) {
            while (std::getline(ss, field, ','))
                t.columns.push_back(Column{field, {}});
            header_done = true;
            continue;
        }
        std::size_t j = 0;
        while (std::getline(ss, field, ',')) {
            if (j >= t.columns.size())
                throw std::runtime_error("csv::read: row wider than header in " + path);
            t.columns[j].values.push_back(std::strtod(field.c_str(), nullptr));
            ++j;
        }
        if (j != t.columns.size())
            throw std::runtime_error("csv::read: short row in " + path);
    }
    return t;
}

} // namespace qzeno::csv
