#include "textmine/dtm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "textmine/csvio.hpp"
#include "textmine/errors.hpp"

namespace textmine {

std::vector<std::int64_t> DocTermMatrix::column_totals() const {
    std::vector<std::int64_t> totals(n_terms(), 0);
    for (std::size_t i = 0; i < cols.size(); ++i) totals[cols[i]] += vals[i];
    return totals;
}

DocTermMatrix build_dtm(const std::vector<TokenizedDoc>& corpus,
                        Weighting weighting, ContextUnit context) {
    DocTermMatrix dtm;
    dtm.weighting = weighting;
    dtm.context = context;

    bool any_tokens = false;
    for (const auto& doc : corpus)
        if (doc.token_count() > 0) any_tokens = true;
    if (corpus.empty() || !any_tokens) throw DataError("empty corpus");

    // first pass fixes the vocabulary in first-occurrence order
    for (const auto& doc : corpus)
        for (const auto& sentence : doc.sentences)
            for (const auto& token : sentence) dtm.vocab.add(token);

    auto add_row = [&](const std::string& id, const std::string& doc_id,
                       const std::map<int, std::int64_t>& counts) {
        dtm.rows.push_back({id, doc_id});
        for (const auto& [col, count] : counts) {
            dtm.cols.push_back(col);
            dtm.vals.push_back(weighting == Weighting::boolean ? 1 : count);
        }
        dtm.row_ptr.push_back(dtm.cols.size());
    };

    dtm.row_ptr.push_back(0);
    for (const auto& doc : corpus) {
        if (context == ContextUnit::document) {
            std::map<int, std::int64_t> counts;
            for (const auto& sentence : doc.sentences)
                for (const auto& token : sentence) counts[dtm.vocab.find(token)]++;
            add_row(doc.id, doc.id, counts);
        } else {
            int sent_no = 0;
            for (const auto& sentence : doc.sentences) {
                ++sent_no;
                std::map<int, std::int64_t> counts;
                for (const auto& token : sentence) counts[dtm.vocab.find(token)]++;
                add_row(doc.id + "#" + std::to_string(sent_no), doc.id, counts);
            }
        }
    }
    return dtm;
}

DocTermMatrix trim_dtm(const DocTermMatrix& dtm, std::int64_t min_total_freq) {
    if (min_total_freq < 1) throw DomainError("trim cutoff must be >= 1");

    auto totals = dtm.column_totals();
    std::vector<int> remap(dtm.n_terms(), -1);
    DocTermMatrix out;
    out.weighting = dtm.weighting;
    out.context = dtm.context;
    out.rows = dtm.rows;
    for (int c = 0; c < dtm.n_terms(); ++c)
        if (totals[c] >= min_total_freq) remap[c] = out.vocab.add(dtm.vocab.terms[c]);

    out.row_ptr.push_back(0);
    for (int r = 0; r < dtm.n_rows(); ++r) {
        for (std::size_t i = dtm.row_ptr[r]; i < dtm.row_ptr[r + 1]; ++i) {
            if (remap[dtm.cols[i]] < 0) continue;
            out.cols.push_back(remap[dtm.cols[i]]);
            out.vals.push_back(dtm.vals[i]);
        }
        out.row_ptr.push_back(out.cols.size());
    }
    return out;
}

LexicalStats lexical_stats(const std::vector<TokenizedDoc>& corpus) {
    std::map<std::string, std::int64_t> freq;
    std::int64_t n_tokens = 0;
    for (const auto& doc : corpus)
        for (const auto& sentence : doc.sentences)
            for (const auto& token : sentence) {
                ++freq[token];
                ++n_tokens;
            }
    if (n_tokens == 0) throw DataError("empty corpus");

    LexicalStats s;
    s.n_docs = static_cast<int>(corpus.size());
    s.n_tokens = n_tokens;
    s.n_types = static_cast<std::int64_t>(freq.size());
    std::int64_t hapax = 0;
    for (const auto& [term, f] : freq) {
        (void)term;
        if (f == 1) ++hapax;
    }
    s.ttr = static_cast<double>(s.n_types) / static_cast<double>(s.n_tokens);
    s.hapax_pct = static_cast<double>(hapax) / static_cast<double>(s.n_types);
    s.guiraud = static_cast<double>(s.n_types) / std::sqrt(static_cast<double>(s.n_tokens));
    return s;
}

std::vector<std::pair<std::string, std::int64_t>> top_terms(const DocTermMatrix& dtm, int n) {
    if (dtm.weighting != Weighting::count)
        throw DomainError("top_terms requires count weighting");
    auto totals = dtm.column_totals();
    std::vector<std::pair<std::string, std::int64_t>> ranked;
    ranked.reserve(totals.size());
    for (int c = 0; c < dtm.n_terms(); ++c)
        ranked.emplace_back(dtm.vocab.terms[c], totals[c]);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (n >= 0 && ranked.size() > static_cast<std::size_t>(n)) ranked.resize(n);
    return ranked;
}

DocTermMatrix aggregate_rows(const DocTermMatrix& dtm,
                             const std::map<std::string, std::string>& row_to_group) {
    std::map<std::string, std::map<int, std::int64_t>> groups;
    std::vector<std::string> order; // group per row, for validation only
    for (int r = 0; r < dtm.n_rows(); ++r) {
        auto it = row_to_group.find(dtm.rows[r].id);
        if (it == row_to_group.end())
            throw DomainError("no group for row: " + dtm.rows[r].id);
        auto& acc = groups[it->second];
        for (std::size_t i = dtm.row_ptr[r]; i < dtm.row_ptr[r + 1]; ++i)
            acc[dtm.cols[i]] += dtm.vals[i];
    }
    (void)order;

    DocTermMatrix out;
    out.weighting = dtm.weighting;
    out.context = dtm.context;
    out.vocab = dtm.vocab;
    out.row_ptr.push_back(0);
    for (const auto& [group, acc] : groups) {
        out.rows.push_back({group, group});
        for (const auto& [col, val] : acc) {
            out.cols.push_back(col);
            out.vals.push_back(dtm.weighting == Weighting::boolean ? 1 : val);
        }
        out.row_ptr.push_back(out.cols.size());
    }
    return out;
}

void save_dtm(const DocTermMatrix& dtm, const std::filesystem::path& csv_path,
              const std::filesystem::path& vocab_path) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw DataError("cannot write " + csv_path.string());
    csv << "row_id,term,value\n";
    for (int r = 0; r < dtm.n_rows(); ++r)
        for (std::size_t i = dtm.row_ptr[r]; i < dtm.row_ptr[r + 1]; ++i)
            csv << csv::escape(dtm.rows[r].id) << ','
                << csv::escape(dtm.vocab.terms[dtm.cols[i]]) << ',' << dtm.vals[i] << '\n';

    std::ofstream vf(vocab_path, std::ios::binary);
    if (!vf) throw DataError("cannot write " + vocab_path.string());
    for (const auto& term : dtm.vocab.terms) vf << term << '\n';
}

DocTermMatrix load_dtm(const std::filesystem::path& csv_path,
                       const std::filesystem::path& vocab_path,
                       Weighting weighting, ContextUnit context) {
    DocTermMatrix dtm;
    dtm.weighting = weighting;
    dtm.context = context;

    std::ifstream vf(vocab_path, std::ios::binary);
    if (!vf) throw DataError("cannot open vocabulary: " + vocab_path.string());
    std::string line;
    while (std::getline(vf, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) dtm.vocab.add(line);
    }

    csv::Table table = csv::read_table(csv_path);
    if (table.header != std::vector<std::string>{"row_id", "term", "value"})
        throw DataError("unexpected DTM header in " + csv_path.string());

    std::string cur_row;
    bool have_row = false;
    std::map<int, std::int64_t> acc;
    auto flush = [&]() {
        if (!have_row) return;
        dtm.rows.push_back({cur_row, cur_row});
        for (const auto& [col, val] : acc) {
            dtm.cols.push_back(col);
            dtm.vals.push_back(val);
        }
        dtm.row_ptr.push_back(dtm.cols.size());
        acc.clear();
    };

    dtm.row_ptr.push_back(0);
    for (const auto& row : table.rows) {
        const std::string& row_id = row[0];
        int col = dtm.vocab.find(row[1]);
        if (col < 0) throw DataError("term not in vocabulary: " + row[1]);
        std::int64_t val = 0;
        try {
            val = std::stoll(row[2]);
        } catch (const std::exception&) {
            throw DataError("bad value in DTM: " + row[2]);
        }
        if (val < 0) throw DataError("negative value in DTM for term " + row[1]);
        if (!have_row || row_id != cur_row) {
            flush();
            cur_row = row_id;
            have_row = true;
        }
        if (val > 0) acc[col] += val;
    }
    flush();
    if (dtm.rows.empty()) throw DataError("empty corpus");
    return dtm;
}

} // namespace textmine
