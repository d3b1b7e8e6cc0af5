#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace textmine::csv {

// Quotes a field when it contains the delimiter, a quote or a newline.
std::string escape(const std::string& field, char delim = ',');

// Splits one line on delim honoring double-quoted fields ("" unescapes).
std::vector<std::string> split(const std::string& line, char delim);

// Picks the delimiter among comma/tab/semicolon that produces the most
// fields on the given header line (ties resolved in that order).
char sniff_delimiter(const std::string& header_line);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows; // padded/truncated to header size
    char delimiter = ',';
};

// Reads a delimited UTF-8 table, first row = header, delimiter sniffed.
Table read_table(const std::filesystem::path& path);

// Fixed-notation double with the given number of decimals; locale-free.
std::string fmt_fixed(double x, int decimals);

// Shortest-ish general format (printf %.*g).
std::string fmt_general(double x, int significant = 12);

} // namespace textmine::csv
