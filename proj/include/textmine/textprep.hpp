#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "textmine/corpus.hpp"

namespace textmine {

struct PrepConfig {
    std::set<std::string> stopwords;
    std::map<std::string, std::string> lemma_table;
    // space-separated multi-word expressions, each with >= 2 words
    std::vector<std::string> collocations;
    int min_word_len = 3;
    bool lowercase = true;
};

struct TokenizedDoc {
    std::string id;
    // tokens are lemmas or underscore-joined collocations
    std::vector<std::vector<std::string>> sentences;

    std::size_t token_count() const {
        std::size_t n = 0;
        for (const auto& s : sentences) n += s.size();
        return n;
    }
};

// ASCII + Latin-1 lowercasing; other codepoints pass through.
std::string to_lower(const std::string& s);

// Splits on '.', '!' or '?' runs followed by whitespace or end of text.
// Terminators stay with their sentence; segments are trimmed and empties
// dropped.
std::vector<std::string> segment_sentences(const std::string& text);

// Lowercases (if configured), removes URLs (scheme:// or www. runs),
// splits on whitespace/punctuation/symbols, drops purely numeric tokens.
std::vector<std::string> tokenize(const std::string& sentence, const PrepConfig& config);

// Greedy left-to-right longest-match replacement of token runs by their
// underscore-joined collocation form.
std::vector<std::string> apply_collocations(const std::vector<std::string>& tokens,
                                            const std::vector<std::string>& collocations);

// Maps tokens through the lemma table; unknown tokens pass through and
// collocation tokens (containing '_') are never mapped.
std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                   const std::map<std::string, std::string>& lemma_table);

// Drops stopwords, then single-word tokens shorter than min_word_len
// (codepoints, not bytes). Collocation tokens are exempt from the length
// rule.
std::vector<std::string> filter_tokens(const std::vector<std::string>& tokens,
                                       const PrepConfig& config);

// Full pipeline: segment -> tokenize -> collocations -> lemmatize ->
// filter, dropping sentences that end up empty.
TokenizedDoc preprocess_document(const Document& doc, const PrepConfig& config);

std::vector<TokenizedDoc> preprocess_corpus(const Corpus& corpus, const PrepConfig& config);

// Resource files. Stopwords: one word per line, '#' starts a comment.
// Lemma table: token<TAB>lemma. Collocations: one space-separated
// expression (>= 2 words) per line. All UTF-8; entries are lowercased.
std::set<std::string> load_stopwords(const std::filesystem::path& path);
std::map<std::string, std::string> load_lemma_table(const std::filesystem::path& path);
std::vector<std::string> load_collocations(const std::filesystem::path& path);

} // namespace textmine
