#include "textmine/csvio.hpp"

#include <cstdio>
#include <fstream>

#include "textmine/errors.hpp"

namespace textmine::csv {

std::string escape(const std::string& field, char delim) {
    bool needs_quotes = false;
    for (char c : field) {
        if (c == delim || c == '"' || c == '\n' || c == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            in_quotes = true;
        } else if (c == delim) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

char sniff_delimiter(const std::string& header_line) {
    const char candidates[3] = {',', '\t', ';'};
    int best_count = -1;
    char best = ',';
    for (char cand : candidates) {
        int count = 0;
        bool in_quotes = false;
        for (char c : header_line) {
            if (c == '"') in_quotes = !in_quotes;
            else if (c == cand && !in_quotes) ++count;
        }
        if (count > best_count) {
            best_count = count;
            best = cand;
        }
    }
    return best;
}

Table read_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open table: " + path.string());
    Table t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first) {
            t.delimiter = sniff_delimiter(line);
            t.header = split(line, t.delimiter);
            first = false;
            continue;
        }
        if (line.empty()) continue;
        auto fields = split(line, t.delimiter);
        fields.resize(t.header.size());
        t.rows.push_back(std::move(fields));
    }
    if (first) throw DataError("empty table: " + path.string());
    return t;
}

std::string fmt_fixed(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    return buf;
}

std::string fmt_general(double x, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, x);
    return buf;
}

} // namespace textmine::csv
