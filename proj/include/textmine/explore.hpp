#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "textmine/dtm.hpp"

namespace textmine {

struct WordCloudDatum {
    std::string term;
    std::int64_t frequency = 0;
    double size = 0.0;
};

// Keeps the top max_terms entries of a frequency ranking and maps
// frequency linearly onto [min_size, max_size] over the kept range; when
// every kept frequency is equal all sizes are max_size.
std::vector<WordCloudDatum>
wordcloud_data(const std::vector<std::pair<std::string, std::int64_t>>& freqs,
               int max_terms, double min_size, double max_size);

struct TermNetwork {
    struct Node {
        std::string term;
        std::int64_t frequency = 0;
    };
    struct Edge {
        std::string a; // lexicographically smaller endpoint
        std::string b;
        std::int64_t weight = 0; // contexts containing both terms
    };
    std::vector<Node> nodes; // in descending frequency order
    std::vector<Edge> edges; // sorted by (a, b)
};

// Network over the dtm's top_n most frequent terms; an edge's weight is
// the number of matrix rows (contexts) where both terms appear, and
// zero-weight pairs are omitted.
TermNetwork term_network(const DocTermMatrix& dtm, int top_n);

} // namespace textmine
