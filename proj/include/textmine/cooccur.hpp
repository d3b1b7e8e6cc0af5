#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "textmine/dtm.hpp"

namespace textmine {

// 2x2 presence table for a term pair over m_total contexts.
struct ContingencyCounts {
    std::int64_t m_total = 0; // M, number of contexts
    std::int64_t m_i = 0;     // contexts containing term x
    std::int64_t m_j = 0;     // contexts containing term y
    std::int64_t m_ij = 0;    // contexts containing both
};

// Dunning's log-likelihood ratio,
//   LLR = 2 [ M log M - Mi log Mi - Mj log Mj + Mij log Mij
//           + (M-Mi-Mj+Mij) log(M-Mi-Mj+Mij)
//           + (Mi-Mij) log(Mi-Mij) + (Mj-Mij) log(Mj-Mij)
//           - (M-Mi) log(M-Mi) - (M-Mj) log(M-Mj) ]
// with 0*log(0) = 0, equivalent to the 2x2 G-statistic. Throws
// DomainError naming the offending count when the table is inconsistent.
double llr(const ContingencyCounts& c);

// Presence/absence matrix at the requested granularity (thin wrapper over
// build_dtm with boolean weighting).
DocTermMatrix build_boolean_contexts(const std::vector<TokenizedDoc>& corpus,
                                     ContextUnit context);

struct CooccurEntry {
    std::string term;
    double llr = 0.0;
    std::int64_t m_i = 0;  // context frequency of the focal term
    std::int64_t m_j = 0;  // context frequency of this term
    std::int64_t m_ij = 0; // contexts containing both
};

// Terms ranked by descending LLR against the focal term (ties
// lexicographic), keeping only pairs seen together at least once and more
// often than independence predicts (m_ij * M > m_i * m_j). Unknown focal
// terms raise DomainError listing the nearest vocabulary matches.
std::vector<CooccurEntry> cooccurring_terms(const DocTermMatrix& bdtm,
                                            const std::string& focal, int top_n);

struct EgoNetwork {
    struct Node {
        std::string term;
        int degree = 0;
    };
    struct Edge {
        std::string a;
        std::string b;
        double llr = 0.0;
    };
    std::string focal;
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    int depth = 1;
};

// Depth 1: star of the focal term and its top_n associates. Depth 2 adds
// edges among first-ring terms whose pairwise LLR clears llr_threshold,
// and up to fanout branch terms per ring node ("ramifications"), also
// gated by the threshold. The focal edges themselves are chosen by rank,
// not threshold, so a threshold above every pairwise LLR reduces depth 2
// back to the depth-1 star.
EgoNetwork ego_network(const DocTermMatrix& bdtm, const std::string& focal, int top_n,
                       int depth, double llr_threshold, int fanout = 5);

} // namespace textmine
