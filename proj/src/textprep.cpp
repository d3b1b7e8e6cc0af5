#include "textmine/textprep.hpp"

#include <algorithm>
#include <fstream>

#include "textmine/errors.hpp"
#include "textmine/utf8.hpp"

namespace textmine {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_unicode_space(std::int32_t cp) {
    if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\v' || cp == '\f')
        return true;
    switch (cp) {
        case 0x00A0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

// Punctuation and symbol codepoints act as token separators. Non-ASCII
// codepoints outside the common punctuation/symbol blocks are treated as
// word characters (letters in any script).
bool is_punct_or_symbol(std::int32_t cp) {
    if (cp < 0x80) {
        bool alnum = (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
                     (cp >= 'a' && cp <= 'z');
        return !alnum; // ASCII controls/space also never reach token bodies
    }
    if (cp >= 0x00A1 && cp <= 0x00BF) return true; // latin-1 punctuation
    if (cp == 0x00D7 || cp == 0x00F7) return true;
    if (cp >= 0x2000 && cp <= 0x206F) return true; // general punctuation
    if (cp >= 0x20A0 && cp <= 0x20CF) return true; // currency
    if (cp >= 0x2190 && cp <= 0x2BFF) return true; // arrows, math, symbols
    if (cp >= 0x3000 && cp <= 0x303F) return true; // CJK punctuation
    if (cp >= 0xFE50 && cp <= 0xFE6F) return true;
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true; // fullwidth forms
    if (cp >= 0xFF1A && cp <= 0xFF20) return true;
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;
    return false;
}

std::int32_t lower_cp(std::int32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 32;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 32;
    return cp;
}

bool is_scheme_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

bool starts_with_www(const std::string& s, std::size_t i) {
    if (i + 4 > s.size()) return false;
    return (s[i] == 'w' || s[i] == 'W') && (s[i + 1] == 'w' || s[i + 1] == 'W') &&
           (s[i + 2] == 'w' || s[i + 2] == 'W') && s[i + 3] == '.';
}

// Blanks out scheme://... and www.... runs up to the next whitespace.
std::string strip_urls(const std::string& s) {
    std::vector<bool> drop(s.size(), false);
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        if (s[i] == ':' && s[i + 1] == '/' && s[i + 2] == '/') {
            std::size_t start = i;
            while (start > 0 && is_scheme_char(s[start - 1])) --start;
            std::size_t end = i + 3;
            while (end < s.size() && !is_ascii_space(s[end])) ++end;
            for (std::size_t j = start; j < end; ++j) drop[j] = true;
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        bool at_boundary = i == 0 || is_ascii_space(s[i - 1]) ||
                           (static_cast<unsigned char>(s[i - 1]) < 0x80 &&
                            !std::isalnum(static_cast<unsigned char>(s[i - 1])));
        if (at_boundary && starts_with_www(s, i) && !drop[i]) {
            std::size_t end = i;
            while (end < s.size() && !is_ascii_space(s[end])) ++end;
            for (std::size_t j = i; j < end; ++j) drop[j] = true;
        }
    }
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!drop[i]) out += s[i];
        else if (out.empty() || out.back() != ' ') out += ' ';
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_ascii_space(s[b])) ++b;
    while (e > b && is_ascii_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

bool purely_numeric(const std::string& token) {
    for (char c : token)
        if (c < '0' || c > '9') return false;
    return !token.empty();
}

} // namespace

std::string to_lower(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        std::int32_t cp = utf8::next(s, i);
        if (cp < 0) continue;
        utf8::append(out, lower_cp(cp));
    }
    return out;
}

std::vector<std::string> segment_sentences(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0, i = 0;
    const std::size_t n = text.size();
    auto is_term = [](char c) { return c == '.' || c == '!' || c == '?'; };
    while (i < n) {
        if (is_term(text[i])) {
            std::size_t j = i;
            while (j < n && is_term(text[j])) ++j;
            if (j == n || is_ascii_space(text[j])) {
                std::string seg = trim(text.substr(start, j - start));
                if (!seg.empty()) out.push_back(std::move(seg));
                start = j;
            }
            i = j;
        } else {
            ++i;
        }
    }
    if (start < n) {
        std::string seg = trim(text.substr(start));
        if (!seg.empty()) out.push_back(std::move(seg));
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& sentence, const PrepConfig& config) {
    std::string s = strip_urls(sentence);
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty() && !purely_numeric(cur)) tokens.push_back(cur);
        cur.clear();
    };
    std::size_t i = 0;
    while (i < s.size()) {
        std::int32_t cp = utf8::next(s, i);
        if (cp < 0 || is_unicode_space(cp) || is_punct_or_symbol(cp)) {
            flush();
            continue;
        }
        if (config.lowercase) cp = lower_cp(cp);
        utf8::append(cur, cp);
    }
    flush();
    return tokens;
}

std::vector<std::string> apply_collocations(const std::vector<std::string>& tokens,
                                            const std::vector<std::string>& collocations) {
    struct Expr {
        std::vector<std::string> words;
        std::string joined;
    };
    std::vector<Expr> exprs;
    for (const auto& c : collocations) {
        Expr e;
        std::size_t pos = 0;
        while (pos < c.size()) {
            std::size_t sp = c.find(' ', pos);
            if (sp == std::string::npos) sp = c.size();
            if (sp > pos) e.words.push_back(c.substr(pos, sp - pos));
            pos = sp + 1;
        }
        if (e.words.size() < 2) continue;
        for (std::size_t w = 0; w < e.words.size(); ++w) {
            if (w > 0) e.joined += '_';
            e.joined += e.words[w];
        }
        exprs.push_back(std::move(e));
    }

    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < tokens.size()) {
        const Expr* best = nullptr;
        for (const auto& e : exprs) {
            if (best && e.words.size() <= best->words.size()) continue;
            if (i + e.words.size() > tokens.size()) continue;
            bool match = true;
            for (std::size_t w = 0; w < e.words.size(); ++w) {
                if (tokens[i + w] != e.words[w]) {
                    match = false;
                    break;
                }
            }
            if (match) best = &e;
        }
        if (best) {
            out.push_back(best->joined);
            i += best->words.size();
        } else {
            out.push_back(tokens[i]);
            ++i;
        }
    }
    return out;
}

std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const std::map<std::string, std::string>& lemma_table) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (t.find('_') != std::string::npos) {
            out.push_back(t);
            continue;
        }
        auto it = lemma_table.find(t);
        out.push_back(it == lemma_table.end() ? t : it->second);
    }
    return out;
}

std::vector<std::string> filter_tokens(const std::vector<std::string>& tokens,
                                       const PrepConfig& config) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (config.stopwords.count(t)) continue;
        if (t.find('_') == std::string::npos &&
            utf8::length(t) < static_cast<std::size_t>(config.min_word_len))
            continue;
        out.push_back(t);
    }
    return out;
}

TokenizedDoc preprocess_document(const Document& doc, const PrepConfig& config) {
    TokenizedDoc out;
    out.id = doc.id;
    for (const auto& sentence : segment_sentences(doc.text)) {
        auto tokens = tokenize(sentence, config);
        tokens = apply_collocations(tokens, config.collocations);
        tokens = lemmatize(tokens, config.lemma_table);
        tokens = filter_tokens(tokens, config);
        if (!tokens.empty()) out.sentences.push_back(std::move(tokens));
    }
    return out;
}

std::vector<TokenizedDoc> preprocess_corpus(const Corpus& corpus, const PrepConfig& config) {
    std::vector<TokenizedDoc> out;
    out.reserve(corpus.documents.size());
    for (const auto& doc : corpus.documents)
        out.push_back(preprocess_document(doc, config));
    return out;
}

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

} // namespace

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::set<std::string> out;
    for (auto& line : read_lines(path)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) out.insert(to_lower(line));
    }
    return out;
}

std::map<std::string, std::string> load_lemma_table(const std::filesystem::path& path) {
    std::map<std::string, std::string> out;
    std::size_t lineno = 0;
    for (auto& line : read_lines(path)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError("lemma file line " + std::to_string(lineno) +
                            " has no tab separator: " + path.string());
        std::string token = trim(line.substr(0, tab));
        std::string lemma = trim(line.substr(tab + 1));
        if (token.empty() || lemma.empty())
            throw DataError("lemma file line " + std::to_string(lineno) +
                            " is incomplete: " + path.string());
        out[to_lower(token)] = to_lower(lemma);
    }
    return out;
}

std::vector<std::string> load_collocations(const std::filesystem::path& path) {
    std::vector<std::string> out;
    std::size_t lineno = 0;
    for (auto& line : read_lines(path)) {
        ++lineno;
        std::string expr = trim(line);
        if (expr.empty()) continue;
        if (expr.find(' ') == std::string::npos)
            throw DataError("collocation on line " + std::to_string(lineno) +
                            " must have at least two words: " + path.string());
        out.push_back(to_lower(expr));
    }
    return out;
}

} // namespace textmine
