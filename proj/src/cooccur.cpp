#include "textmine/cooccur.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "textmine/errors.hpp"
#include "textmine/mathutil.hpp"

namespace textmine {

namespace {

void check_counts(const ContingencyCounts& c) {
    auto bad = [](const std::string& what) { throw DomainError("inconsistent contingency counts: " + what); };
    if (c.m_total < 1) bad("m_total must be at least 1, got " + std::to_string(c.m_total));
    if (c.m_i < 0) bad("m_i is negative");
    if (c.m_j < 0) bad("m_j is negative");
    if (c.m_ij < 0) bad("m_ij is negative");
    if (c.m_i > c.m_total) bad("m_i exceeds m_total");
    if (c.m_j > c.m_total) bad("m_j exceeds m_total");
    if (c.m_ij > c.m_i) bad("m_ij exceeds m_i");
    if (c.m_ij > c.m_j) bad("m_ij exceeds m_j");
    if (c.m_i + c.m_j - c.m_ij > c.m_total)
        bad("m_i + m_j - m_ij exceeds m_total");
}

// Per-column sorted row lists; pairwise conjunction counts are sorted
// intersections.
std::vector<std::vector<int>> column_rows(const DocTermMatrix& dtm) {
    std::vector<std::vector<int>> out(dtm.n_terms());
    for (int r = 0; r < dtm.n_rows(); ++r)
        for (std::size_t e = dtm.row_ptr[r]; e < dtm.row_ptr[r + 1]; ++e)
            out[dtm.cols[e]].push_back(r);
    return out;
}

std::int64_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::int64_t n = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++n; ++ia; ++ib; }
    }
    return n;
}

int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

[[noreturn]] void unknown_focal(const DocTermMatrix& dtm, const std::string& focal) {
    std::vector<std::pair<int, std::string>> near;
    for (const auto& term : dtm.vocab.terms) {
        int d = edit_distance(focal, term);
        if (d <= 2) near.emplace_back(d, term);
    }
    std::sort(near.begin(), near.end());
    std::string msg = "unknown term '" + focal + "'";
    if (!near.empty()) {
        msg += "; nearest matches:";
        for (std::size_t i = 0; i < near.size() && i < 3; ++i)
            msg += (i ? ", " : " ") + near[i].second;
    }
    throw DomainError(msg);
}

} // namespace

double llr(const ContingencyCounts& c) {
    check_counts(c);
    double m = static_cast<double>(c.m_total);
    double mi = static_cast<double>(c.m_i);
    double mj = static_cast<double>(c.m_j);
    double mij = static_cast<double>(c.m_ij);
    return 2.0 * (xlogx(m) - xlogx(mi) - xlogx(mj) + xlogx(mij)
                  + xlogx(m - mi - mj + mij)
                  + xlogx(mi - mij) + xlogx(mj - mij)
                  - xlogx(m - mi) - xlogx(m - mj));
}

DocTermMatrix build_boolean_contexts(const std::vector<TokenizedDoc>& corpus,
                                     ContextUnit context) {
    return build_dtm(corpus, Weighting::boolean, context);
}

std::vector<CooccurEntry> cooccurring_terms(const DocTermMatrix& bdtm,
                                            const std::string& focal, int top_n) {
    if (bdtm.weighting != Weighting::boolean)
        throw DomainError("co-occurrence analysis requires boolean weighting");
    if (top_n < 1) throw DomainError("top_n must be at least 1");
    int fi = bdtm.vocab.find(focal);
    if (fi < 0) unknown_focal(bdtm, focal);

    const std::int64_t m = bdtm.n_rows();
    std::vector<std::int64_t> df = bdtm.column_totals();

    // Conjunction counts over just the rows that contain the focal term.
    std::unordered_set<int> focal_rows;
    for (int r = 0; r < bdtm.n_rows(); ++r)
        for (std::size_t e = bdtm.row_ptr[r]; e < bdtm.row_ptr[r + 1]; ++e)
            if (bdtm.cols[e] == fi) { focal_rows.insert(r); break; }
    std::vector<std::int64_t> both(bdtm.n_terms(), 0);
    for (int r : focal_rows)
        for (std::size_t e = bdtm.row_ptr[r]; e < bdtm.row_ptr[r + 1]; ++e)
            ++both[bdtm.cols[e]];

    std::vector<CooccurEntry> out;
    for (int v = 0; v < bdtm.n_terms(); ++v) {
        if (v == fi || both[v] < 1) continue;
        if (both[v] * m <= df[fi] * df[v]) continue; // at or below independence
        ContingencyCounts c{m, df[fi], df[v], both[v]};
        out.push_back({bdtm.vocab.terms[v], llr(c), c.m_i, c.m_j, c.m_ij});
    }
    std::sort(out.begin(), out.end(), [](const CooccurEntry& a, const CooccurEntry& b) {
        if (a.llr != b.llr) return a.llr > b.llr;
        return a.term < b.term;
    });
    if (static_cast<int>(out.size()) > top_n) out.resize(top_n);
    return out;
}

EgoNetwork ego_network(const DocTermMatrix& bdtm, const std::string& focal, int top_n,
                       int depth, double llr_threshold, int fanout) {
    if (depth != 1 && depth != 2) throw DomainError("depth must be 1 or 2");
    if (llr_threshold < 0.0) throw DomainError("llr threshold must be nonnegative");
    if (fanout < 0) throw DomainError("fanout must be nonnegative");

    EgoNetwork net;
    net.focal = focal;
    net.depth = depth;

    std::vector<CooccurEntry> ring = cooccurring_terms(bdtm, focal, top_n);
    std::unordered_map<std::string, int> node_of;
    auto add_node = [&](const std::string& term) {
        auto it = node_of.find(term);
        if (it != node_of.end()) return it->second;
        int id = static_cast<int>(net.nodes.size());
        net.nodes.push_back({term, 0});
        node_of.emplace(term, id);
        return id;
    };
    auto add_edge = [&](const std::string& a, const std::string& b, double w) {
        net.edges.push_back({a, b, w});
        ++net.nodes[add_node(a)].degree;
        ++net.nodes[add_node(b)].degree;
    };

    add_node(focal);
    for (const auto& e : ring) {
        add_node(e.term);
        add_edge(focal, e.term, e.llr);
    }

    if (depth == 2) {
        const std::int64_t m = bdtm.n_rows();
        std::vector<std::int64_t> df = bdtm.column_totals();
        std::vector<std::vector<int>> rows_of = column_rows(bdtm);

        // Chords: ring pairs whose own association clears the threshold.
        for (std::size_t i = 0; i < ring.size(); ++i) {
            for (std::size_t j = i + 1; j < ring.size(); ++j) {
                int a = bdtm.vocab.find(ring[i].term);
                int b = bdtm.vocab.find(ring[j].term);
                std::int64_t both = intersection_size(rows_of[a], rows_of[b]);
                if (both < 1 || both * m <= df[a] * df[b]) continue;
                double w = llr({m, df[a], df[b], both});
                if (w >= llr_threshold) add_edge(ring[i].term, ring[j].term, w);
            }
        }
        // Ramifications: each ring node brings along its own strongest
        // associates (new terms only), gated by the same threshold.
        for (const auto& r : ring) {
            int added = 0;
            for (const auto& cand : cooccurring_terms(bdtm, r.term, bdtm.n_terms())) {
                if (added >= fanout) break;
                if (cand.llr < llr_threshold) break; // ranked desc: nothing further clears it
                if (node_of.count(cand.term)) continue;
                add_node(cand.term);
                add_edge(r.term, cand.term, cand.llr);
                ++added;
            }
        }
    }
    return net;
}

} // namespace textmine
