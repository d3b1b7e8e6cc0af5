#include "textmine/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "textmine/cooccur.hpp"
#include "textmine/csvio.hpp"
#include "textmine/errors.hpp"
#include "textmine/explore.hpp"
#include "textmine/graphio.hpp"
#include "textmine/lda.hpp"
#include "textmine/utf8.hpp"

namespace textmine {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    return out;
}

// Prepares output_dir and drops the provenance copy of the settings.
fs::path out_dir(const RunConfig& cfg) {
    fs::create_directories(cfg.output_dir);
    write_effective_config(cfg, cfg.output_dir / "effective_config.ini");
    return cfg.output_dir;
}

// With a metadata table the corpus module does the full join; without one
// the documents are read directly (metadata-free runs are common for
// stats / preprocess / co-occurrence).
Corpus load_input_corpus(const RunConfig& cfg) {
    if (cfg.corpus_dir.empty()) throw DataError("no corpus directory configured");
    if (!cfg.metadata_path.empty()) return load_corpus(cfg.corpus_dir, cfg.metadata_path);

    if (!fs::is_directory(cfg.corpus_dir))
        throw DataError("corpus directory not found: " + cfg.corpus_dir.string());
    std::vector<std::string> ids;
    for (const auto& entry : fs::directory_iterator(cfg.corpus_dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        ids.push_back(entry.path().stem().string());
    }
    if (ids.empty())
        throw DataError("empty corpus: no .txt files in " + cfg.corpus_dir.string());
    std::sort(ids.begin(), ids.end());

    Corpus corpus;
    for (const auto& id : ids) {
        fs::path file = cfg.corpus_dir / (id + ".txt");
        std::ifstream in(file, std::ios::binary);
        if (!in) throw DataError("cannot read " + file.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        Document doc;
        doc.id = id;
        doc.text = ss.str();
        if (!utf8::valid(doc.text))
            throw DataError("file is not valid UTF-8: " + file.string());
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

PrepConfig prep_config(const RunConfig& cfg) {
    PrepConfig prep;
    prep.min_word_len = cfg.min_word_len;
    if (!cfg.stopwords_path.empty()) prep.stopwords = load_stopwords(cfg.stopwords_path);
    if (!cfg.lemma_path.empty()) prep.lemma_table = load_lemma_table(cfg.lemma_path);
    if (!cfg.collocations_path.empty())
        prep.collocations = load_collocations(cfg.collocations_path);
    return prep;
}

std::vector<TokenizedDoc> prep_corpus(const RunConfig& cfg, Corpus* corpus_out = nullptr) {
    Corpus corpus = load_input_corpus(cfg);
    std::vector<TokenizedDoc> toks = preprocess_corpus(corpus, prep_config(cfg));
    if (corpus_out) *corpus_out = std::move(corpus);
    return toks;
}

std::string safe_name(const std::string& s) {
    std::string out;
    for (char ch : s) {
        bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                  (ch >= '0' && ch <= '9') || ch == '_' || ch == '-' || ch == '.';
        out += ok ? ch : '_';
    }
    return out;
}

GraphSpec ego_to_graph(const EgoNetwork& net) {
    GraphSpec g;
    g.node_attr = "degree";
    g.edge_attr = "llr";
    for (const auto& n : net.nodes) g.nodes.push_back({n.term, static_cast<double>(n.degree)});
    for (const auto& e : net.edges) g.edges.push_back({e.a, e.b, e.llr});
    return g;
}

GraphSpec term_net_to_graph(const TermNetwork& net) {
    GraphSpec g;
    g.node_attr = "frequency";
    g.edge_attr = "count";
    for (const auto& n : net.nodes)
        g.nodes.push_back({n.term, static_cast<double>(n.frequency)});
    for (const auto& e : net.edges)
        g.edges.push_back({e.a, e.b, static_cast<double>(e.weight)});
    return g;
}

// Plain deterministic line chart (640x400, 70/20/30/50 px margins).
void write_line_chart(const fs::path& path, const std::string& xlabel,
                      const std::string& ylabel, const std::vector<double>& xs,
                      const std::vector<double>& ys, double mark_x) {
    const double W = 640, H = 400, L = 70, R = 20, T = 30, B = 50;
    double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
    for (double x : xs) { xmin = std::min(xmin, x); xmax = std::max(xmax, x); }
    for (double y : ys) { ymin = std::min(ymin, y); ymax = std::max(ymax, y); }
    if (xmax == xmin) { xmin -= 1; xmax += 1; }
    if (ymax == ymin) { ymin -= 1; ymax += 1; }
    auto px = [&](double x) { return L + (W - L - R) * (x - xmin) / (xmax - xmin); };
    auto py = [&](double y) { return H - B - (H - T - B) * (y - ymin) / (ymax - ymin); };

    std::ofstream out = open_out(path);
    char buf[256];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
           "viewBox=\"0 0 640 400\">\n";
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#333\"/>\n",
                  L, H - B, W - R, H - B);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#333\"/>\n",
                  L, T, L, H - B);
    out << buf;
    out << "  <text x=\"" << (L + (W - L - R) / 2) << "\" y=\"" << (H - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xlabel
        << "</text>\n";
    out << "  <text x=\"18\" y=\"" << (T + (H - T - B) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << (T + (H - T - B) / 2) << ")\">" << ylabel << "</text>\n";

    std::string points;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(xs[i]), py(ys[i]));
        points += buf;
    }
    if (xs.size() > 1)
        out << "  <polyline fill=\"none\" stroke=\"#2565ae\" stroke-width=\"2\" points=\""
            << points << "\"/>\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool mark = xs[i] == mark_x;
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"%s\"/>\n",
                      px(xs[i]), py(ys[i]), mark ? 5.0 : 3.5, mark ? "#c23b22" : "#2565ae");
        out << buf;
        std::snprintf(buf, sizeof buf,
                      "  <text x=\"%.2f\" y=\"%.1f\" text-anchor=\"middle\" "
                      "font-family=\"sans-serif\" font-size=\"11\">%g</text>\n",
                      px(xs[i]), H - B + 16, xs[i]);
        out << buf;
    }
    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%.2f</text>\n",
                  4.0, py(ymax) + 4, ymax);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "  <text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%.2f</text>\n",
                  4.0, py(ymin) + 4, ymin);
    out << buf;
    out << "</svg>\n";
}

} // namespace

void cmd_stats(const RunConfig& cfg) {
    fs::path dir = out_dir(cfg);
    std::vector<TokenizedDoc> toks = prep_corpus(cfg);
    LexicalStats st = lexical_stats(toks);

    std::ofstream kcsv = open_out(dir / "key_features.csv");
    kcsv << "metric,value\n"
         << "documents," << st.n_docs << "\n"
         << "tokens," << st.n_tokens << "\n"
         << "types," << st.n_types << "\n"
         << "ttr," << csv::fmt_general(st.ttr, 12) << "\n"
         << "hapax_share," << csv::fmt_general(st.hapax_pct, 12) << "\n"
         << "guiraud," << csv::fmt_general(st.guiraud, 12) << "\n";

    std::ofstream txt = open_out(dir / "key_features.txt");
    txt << "Key features of the corpus\n"
        << "Documents: " << st.n_docs << "\n"
        << "Tokens:    " << st.n_tokens << "\n"
        << "Types:     " << st.n_types << "\n"
        << "TTR:       " << csv::fmt_fixed(100.0 * st.ttr, 1) << "%\n"
        << "Hapax:     " << csv::fmt_fixed(100.0 * st.hapax_pct, 1) << "% of types\n"
        << "Guiraud:   " << csv::fmt_fixed(st.guiraud, 2) << "\n";
}

void cmd_topics(const RunConfig& cfg) {
    fs::path dir = out_dir(cfg);
    Corpus corpus;
    std::vector<TokenizedDoc> toks = prep_corpus(cfg, &corpus);

    DocTermMatrix dtm = build_dtm(toks, cfg.weighting, ContextUnit::document);
    dtm = trim_dtm(dtm, cfg.min_term_freq);
    if (dtm.n_terms() == 0)
        throw DataError("no terms survive the frequency cutoff " +
                        std::to_string(cfg.min_term_freq));

    if (!cfg.group_by.empty()) {
        if (corpus.documents.empty() ||
            !corpus.documents.front().metadata.count(cfg.group_by))
            throw DomainError("metadata variable '" + cfg.group_by + "' not found");
        std::map<std::string, std::string> row_to_group;
        std::vector<std::string> missing;
        for (const auto& doc : corpus.documents) {
            auto it = doc.metadata.find(cfg.group_by);
            if (it == doc.metadata.end() || it->second.empty()) missing.push_back(doc.id);
            else row_to_group[doc.id] = it->second;
        }
        if (!missing.empty()) {
            std::string msg = "documents without a '" + cfg.group_by + "' value:";
            for (const auto& id : missing) msg += " " + id;
            throw DomainError(msg);
        }
        dtm = aggregate_rows(dtm, row_to_group);
    }

    LdaConfig tmpl;
    tmpl.alpha = cfg.alpha;
    tmpl.delta = cfg.delta;
    tmpl.seed = cfg.seed;
    tmpl.em_max_iter = cfg.em_max_iter;
    tmpl.em_rel_tol = cfg.em_rel_tol;
    tmpl.estep_max_iter = cfg.estep_max_iter;
    tmpl.estep_rel_tol = cfg.estep_rel_tol;

    std::vector<int> ks;
    std::vector<double> bics;
    int chosen = 0, best = 0;
    if (cfg.k > 0) {
        chosen = best = cfg.k;
    } else {
        ModelSelectionResult sel = select_k(dtm, cfg.k_min, cfg.k_max, tmpl);
        ks = sel.k_values;
        bics = sel.bic;
        chosen = sel.chosen_k;
        best = sel.best_k;
    }

    LdaConfig fit_cfg = tmpl;
    fit_cfg.k = chosen;
    if (!(tmpl.alpha > 0.0)) fit_cfg.alpha = 50.0 / chosen;
    LdaModel model;
    try {
        model = fit_lda(dtm, fit_cfg);
    } catch (const NumericalError& e) {
        throw NumericalError("k=" + std::to_string(chosen) + ": " + e.what());
    }
    if (cfg.k > 0) {
        ks.push_back(cfg.k);
        bics.push_back(bic(model, dtm));
    }

    std::ofstream bcsv = open_out(dir / "bic.csv");
    bcsv << "k,bic,chosen\n";
    for (std::size_t i = 0; i < ks.size(); ++i)
        bcsv << ks[i] << "," << csv::fmt_general(bics[i], 12) << ","
             << (ks[i] == chosen ? 1 : 0) << "\n";
    std::vector<double> xs(ks.begin(), ks.end());
    write_line_chart(dir / "bic.svg", "k (number of topics)", "BIC", xs, bics, chosen);

    std::ofstream sel_txt = open_out(dir / "selection.txt");
    sel_txt << "criterion: BIC = -2 * log_likelihood_bound + p * ln(n)\n"
            << "p: k * (V - 1), V = " << model.beta.n_cols << "\n"
            << "n: total tokens = " << dtm.total() << "\n"
            << "best_k: " << best << (cfg.k > 0 ? " (fixed by configuration)" : "") << "\n"
            << "chosen_k: " << chosen << "\n";

    std::ofstream tcsv = open_out(dir / "topic_terms.csv");
    tcsv << "topic,rank,term,probability\n";
    auto tops = topic_terms(model, 10);
    for (std::size_t t = 0; t < tops.size(); ++t)
        for (std::size_t r = 0; r < tops[t].size(); ++r)
            tcsv << (t + 1) << "," << (r + 1) << "," << csv::escape(tops[t][r].first) << ","
                 << csv::fmt_general(tops[t][r].second, 12) << "\n";

    std::ofstream dcsv = open_out(dir / "doc_topics.csv");
    dcsv << "doc_id";
    for (int t = 1; t <= model.theta.n_cols; ++t) dcsv << ",topic_" << t;
    dcsv << "\n";
    for (const auto& [id, mix] : doc_topic_mixture(model)) {
        dcsv << csv::escape(id);
        for (double w : mix) dcsv << "," << csv::fmt_general(w, 12);
        dcsv << "\n";
    }

    save_model_json(model, dir / "model.json");
}

void cmd_cooccur(const RunConfig& cfg) {
    fs::path dir = out_dir(cfg);
    if (cfg.focal_terms.empty()) throw DomainError("no focal terms configured");
    std::vector<TokenizedDoc> toks = prep_corpus(cfg);
    DocTermMatrix bdtm = build_boolean_contexts(toks, cfg.context);
    bdtm = trim_dtm(bdtm, cfg.min_term_freq);

    for (const auto& focal : cfg.focal_terms) {
        std::vector<CooccurEntry> ranked = cooccurring_terms(bdtm, focal, cfg.top_n);
        std::string stem = safe_name(focal);
        std::ofstream ccsv = open_out(dir / ("cooccur_" + stem + ".csv"));
        ccsv << "term,llr,m_i,m_j,m_ij\n";
        for (const auto& e : ranked)
            ccsv << csv::escape(e.term) << "," << csv::fmt_general(e.llr, 12) << ","
                 << e.m_i << "," << e.m_j << "," << e.m_ij << "\n";

        EgoNetwork net = ego_network(bdtm, focal, cfg.top_n, cfg.depth, cfg.llr_threshold,
                                     cfg.fanout);
        GraphSpec g = ego_to_graph(net);
        write_graphml(g, dir / ("ego_" + stem + ".graphml"));
        write_dot(g, dir / ("ego_" + stem + ".dot"));
        write_svg(g, dir / ("ego_" + stem + ".svg"));
    }
}

void cmd_simulate(const RunConfig& cfg) {
    fs::path dir = out_dir(cfg);
    SyntheticCorpus sc = sample_corpus(cfg.sim_k, cfg.sim_n_terms, cfg.sim_n_docs,
                                       cfg.sim_doc_len, cfg.sim_alpha, cfg.sim_delta,
                                       cfg.seed);
    save_dtm(sc.dtm, dir / "simulated_dtm.csv", dir / "simulated_vocab.txt");

    nlohmann::json truth;
    truth["k"] = cfg.sim_k;
    truth["n_terms"] = cfg.sim_n_terms;
    truth["n_docs"] = cfg.sim_n_docs;
    truth["doc_len"] = cfg.sim_doc_len;
    truth["alpha"] = cfg.sim_alpha;
    truth["delta"] = cfg.sim_delta;
    truth["seed"] = cfg.seed;
    truth["terms"] = sc.dtm.vocab.terms;
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& r : sc.dtm.rows) ids.push_back(r.id);
    truth["doc_ids"] = std::move(ids);
    auto mat = [](const Mat& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < m.n_rows; ++r)
            rows.push_back(std::vector<double>(m.row(r), m.row(r) + m.n_cols));
        return rows;
    };
    truth["true_beta"] = mat(sc.true_beta);
    truth["true_theta"] = mat(sc.true_theta);
    truth["assignments"] = sc.true_assignments;
    std::ofstream out = open_out(dir / "truth.json");
    out << truth.dump(2) << "\n";
}

void cmd_preprocess(const RunConfig& cfg) {
    fs::path dir = out_dir(cfg);
    std::vector<TokenizedDoc> toks = prep_corpus(cfg);
    std::ofstream out = open_out(dir / "tokens.csv");
    out << "doc_id,sentence,tokens\n";
    for (const auto& doc : toks) {
        for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
            std::string joined;
            for (std::size_t i = 0; i < doc.sentences[s].size(); ++i)
                joined += (i ? " " : "") + doc.sentences[s][i];
            out << csv::escape(doc.id) << "," << (s + 1) << "," << csv::escape(joined)
                << "\n";
        }
    }
}

void cmd_explore(const RunConfig& cfg) {
    fs::path dir = out_dir(cfg);
    std::vector<TokenizedDoc> toks = prep_corpus(cfg);
    DocTermMatrix dtm = build_dtm(toks, cfg.weighting, cfg.context);
    dtm = trim_dtm(dtm, cfg.min_term_freq);
    if (dtm.n_terms() == 0)
        throw DataError("no terms survive the frequency cutoff " +
                        std::to_string(cfg.min_term_freq));

    auto ranked = top_terms(dtm, dtm.n_terms());
    std::ofstream fcsv = open_out(dir / "frequencies.csv");
    fcsv << "term,frequency\n";
    for (const auto& [term, freq] : ranked)
        fcsv << csv::escape(term) << "," << freq << "\n";

    auto cloud = wordcloud_data(ranked, cfg.wordcloud_max_terms, cfg.wordcloud_min_size,
                                cfg.wordcloud_max_size);
    std::ofstream wcsv = open_out(dir / "wordcloud.csv");
    wcsv << "term,frequency,size\n";
    for (const auto& d : cloud)
        wcsv << csv::escape(d.term) << "," << d.frequency << ","
             << csv::fmt_general(d.size, 12) << "\n";

    TermNetwork net = term_network(dtm, std::min(cfg.network_top_n, dtm.n_terms()));
    GraphSpec g = term_net_to_graph(net);
    write_graphml(g, dir / "term_network.graphml");
    write_dot(g, dir / "term_network.dot");
    write_svg(g, dir / "term_network.svg");
}

} // namespace textmine
