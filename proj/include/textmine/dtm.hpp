#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "textmine/textprep.hpp"

namespace textmine {

struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, int> index;

    int add(const std::string& term) {
        auto it = index.find(term);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(terms.size());
        terms.push_back(term);
        index.emplace(term, id);
        return id;
    }

    // -1 when absent
    int find(const std::string& term) const {
        auto it = index.find(term);
        return it == index.end() ? -1 : it->second;
    }

    int size() const { return static_cast<int>(terms.size()); }
};

enum class Weighting { count, boolean };
enum class ContextUnit { document, sentence };

// Sparse contexts-by-terms matrix (CSR, columns sorted within each row,
// no explicit zeros). Boolean weighting stores all-ones.
struct DocTermMatrix {
    struct RowInfo {
        std::string id;     // "<doc id>" or "<doc id>#<sentence number>"
        std::string doc_id; // parent document
    };

    std::vector<RowInfo> rows;
    Vocabulary vocab;
    Weighting weighting = Weighting::count;
    ContextUnit context = ContextUnit::document;

    std::vector<std::size_t> row_ptr; // size rows+1
    std::vector<int> cols;
    std::vector<std::int64_t> vals;

    int n_rows() const { return static_cast<int>(rows.size()); }
    int n_terms() const { return vocab.size(); }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto v : vals) s += v;
        return s;
    }

    std::vector<std::int64_t> column_totals() const;
};

struct LexicalStats {
    int n_docs = 0;
    std::int64_t n_tokens = 0; // N
    std::int64_t n_types = 0;  // V
    double ttr = 0.0;          // V/N
    double hapax_pct = 0.0;    // fraction of types with frequency 1
    double guiraud = 0.0;      // V/sqrt(N)
};

// One row per document (or per sentence, ids "<doc>#<n>", 1-based).
// Vocabulary is in first-occurrence order. Throws DataError when every
// document is empty.
DocTermMatrix build_dtm(const std::vector<TokenizedDoc>& corpus,
                        Weighting weighting, ContextUnit context);

// Drops vocabulary columns whose summed value is below min_total_freq
// (for boolean matrices the column sum is the document frequency). Rows
// that become empty are kept as empty rows.
DocTermMatrix trim_dtm(const DocTermMatrix& dtm, std::int64_t min_total_freq);

// Computed on the cleaned, untrimmed token stream.
LexicalStats lexical_stats(const std::vector<TokenizedDoc>& corpus);

// Terms by descending total frequency, ties lexicographic; count matrices
// only.
std::vector<std::pair<std::string, std::int64_t>> top_terms(const DocTermMatrix& dtm, int n);

// Sums rows into one row per group (group = row_to_group.at(row id));
// boolean matrices OR instead of add. Group rows come out in
// lexicographic group order.
DocTermMatrix aggregate_rows(const DocTermMatrix& dtm,
                             const std::map<std::string, std::string>& row_to_group);

// Sparse triplet CSV with header row_id,term,value plus a sidecar
// vocabulary file (one term per line, column order).
void save_dtm(const DocTermMatrix& dtm, const std::filesystem::path& csv_path,
              const std::filesystem::path& vocab_path);

DocTermMatrix load_dtm(const std::filesystem::path& csv_path,
                       const std::filesystem::path& vocab_path,
                       Weighting weighting = Weighting::count,
                       ContextUnit context = ContextUnit::document);

} // namespace textmine
