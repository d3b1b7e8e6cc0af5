#include "textmine/explore.hpp"

#include <algorithm>

#include "textmine/errors.hpp"

namespace textmine {

std::vector<WordCloudDatum>
wordcloud_data(const std::vector<std::pair<std::string, std::int64_t>>& freqs,
               int max_terms, double min_size, double max_size) {
    if (freqs.empty()) throw DomainError("empty frequency list");
    if (max_terms < 1) throw DomainError("max_terms must be at least 1");
    if (!(min_size < max_size)) throw DomainError("min_size must be below max_size");

    std::size_t n = std::min<std::size_t>(freqs.size(), static_cast<std::size_t>(max_terms));
    std::int64_t fmin = freqs[0].second, fmax = freqs[0].second;
    for (std::size_t i = 0; i < n; ++i) {
        fmin = std::min(fmin, freqs[i].second);
        fmax = std::max(fmax, freqs[i].second);
    }
    std::vector<WordCloudDatum> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double size = fmax == fmin
                          ? max_size
                          : min_size + (max_size - min_size) *
                                           static_cast<double>(freqs[i].second - fmin) /
                                           static_cast<double>(fmax - fmin);
        out.push_back({freqs[i].first, freqs[i].second, size});
    }
    return out;
}

TermNetwork term_network(const DocTermMatrix& dtm, int top_n) {
    if (top_n < 1) throw DomainError("top_n must be at least 1");
    if (top_n > dtm.n_terms())
        throw DomainError("top_n " + std::to_string(top_n) + " exceeds the vocabulary size " +
                          std::to_string(dtm.n_terms()));

    auto ranked = top_terms(dtm, top_n);
    TermNetwork net;
    net.nodes.reserve(ranked.size());
    for (const auto& [term, freq] : ranked) net.nodes.push_back({term, freq});

    // Row sets per selected column; edge weight = intersection size.
    std::vector<int> sel(dtm.n_terms(), -1);
    for (std::size_t i = 0; i < ranked.size(); ++i)
        sel[dtm.vocab.find(ranked[i].first)] = static_cast<int>(i);
    std::vector<std::vector<int>> rows_of(ranked.size());
    for (int r = 0; r < dtm.n_rows(); ++r) {
        for (std::size_t e = dtm.row_ptr[r]; e < dtm.row_ptr[r + 1]; ++e) {
            int i = sel[dtm.cols[e]];
            if (i >= 0) rows_of[i].push_back(r);
        }
    }
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        for (std::size_t j = i + 1; j < ranked.size(); ++j) {
            std::int64_t w = 0;
            auto ia = rows_of[i].begin();
            auto ib = rows_of[j].begin();
            while (ia != rows_of[i].end() && ib != rows_of[j].end()) {
                if (*ia < *ib) ++ia;
                else if (*ib < *ia) ++ib;
                else { ++w; ++ia; ++ib; }
            }
            if (w == 0) continue;
            const std::string& a = ranked[i].first;
            const std::string& b = ranked[j].first;
            if (a < b) net.edges.push_back({a, b, w});
            else net.edges.push_back({b, a, w});
        }
    }
    std::sort(net.edges.begin(), net.edges.end(), [](const auto& x, const auto& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return net;
}

} // namespace textmine
