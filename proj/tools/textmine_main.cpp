#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "textmine/commands.hpp"
#include "textmine/errors.hpp"

namespace {

// CLI flags override the config file; sentinels mark "not given".
struct Flags {
    std::string config;
    std::string corpus_dir, metadata, stopwords, lemmas, collocations;
    std::string output_dir, group_by, context, weighting;
    std::vector<std::string> focal;
    int min_word_len = -1;
    long long min_term_freq = -1;
    int k = -1, k_min = -1, k_max = -1;
    double alpha = std::nan(""), delta = std::nan("");
    long long seed = -1;
    int top_n = -1, depth = -1, fanout = -1;
    double llr_threshold = std::nan("");
    int network_top_n = -1, wordcloud_max_terms = -1;
    int sim_k = -1, sim_n_terms = -1, sim_n_docs = -1, sim_doc_len = -1;
};

textmine::RunConfig effective_config(const Flags& f) {
    textmine::RunConfig cfg;
    if (!f.config.empty()) cfg = textmine::load_config(f.config);
    if (!f.corpus_dir.empty()) cfg.corpus_dir = f.corpus_dir;
    if (!f.metadata.empty()) cfg.metadata_path = f.metadata;
    if (!f.stopwords.empty()) cfg.stopwords_path = f.stopwords;
    if (!f.lemmas.empty()) cfg.lemma_path = f.lemmas;
    if (!f.collocations.empty()) cfg.collocations_path = f.collocations;
    if (!f.output_dir.empty()) cfg.output_dir = f.output_dir;
    if (!f.group_by.empty()) cfg.group_by = f.group_by;
    if (f.context == "document") cfg.context = textmine::ContextUnit::document;
    else if (f.context == "sentence") cfg.context = textmine::ContextUnit::sentence;
    if (f.weighting == "count") cfg.weighting = textmine::Weighting::count;
    else if (f.weighting == "boolean") cfg.weighting = textmine::Weighting::boolean;
    if (!f.focal.empty()) cfg.focal_terms = f.focal;
    if (f.min_word_len >= 0) cfg.min_word_len = f.min_word_len;
    if (f.min_term_freq >= 0) cfg.min_term_freq = f.min_term_freq;
    if (f.k >= 0) cfg.k = f.k;
    if (f.k_min >= 0) cfg.k_min = f.k_min;
    if (f.k_max >= 0) cfg.k_max = f.k_max;
    if (!std::isnan(f.alpha)) cfg.alpha = f.alpha;
    if (!std::isnan(f.delta)) cfg.delta = f.delta;
    if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
    if (f.top_n >= 0) cfg.top_n = f.top_n;
    if (f.depth >= 0) cfg.depth = f.depth;
    if (f.fanout >= 0) cfg.fanout = f.fanout;
    if (!std::isnan(f.llr_threshold)) cfg.llr_threshold = f.llr_threshold;
    if (f.network_top_n >= 0) cfg.network_top_n = f.network_top_n;
    if (f.wordcloud_max_terms >= 0) cfg.wordcloud_max_terms = f.wordcloud_max_terms;
    if (f.sim_k >= 0) cfg.sim_k = f.sim_k;
    if (f.sim_n_terms >= 0) cfg.sim_n_terms = f.sim_n_terms;
    if (f.sim_n_docs >= 0) cfg.sim_n_docs = f.sim_n_docs;
    if (f.sim_doc_len >= 0) cfg.sim_doc_len = f.sim_doc_len;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"textmine: corpus statistics, topic models and co-occurrence networks"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("-c,--config", f.config, "configuration file (sectioned key=value)");
    app.add_option("--corpus-dir", f.corpus_dir, "directory of <id>.txt documents");
    app.add_option("--metadata", f.metadata, "delimited metadata table with a doc_id column");
    app.add_option("--stopwords", f.stopwords, "stopword list, one per line");
    app.add_option("--lemmas", f.lemmas, "lemma table (token<TAB>lemma per line)");
    app.add_option("--collocations", f.collocations, "multi-word expressions, one per line");
    app.add_option("-o,--output-dir", f.output_dir, "output directory (default: out)");
    app.add_option("--min-word-len", f.min_word_len, "drop shorter tokens (default 3)");
    app.add_option("--min-term-freq", f.min_term_freq, "vocabulary cutoff (default 20)");
    app.add_option("--context", f.context, "co-occurrence context unit")
        ->check(CLI::IsMember({"document", "sentence"}));
    app.add_option("--weighting", f.weighting, "matrix weighting")
        ->check(CLI::IsMember({"count", "boolean"}));
    app.add_option("--seed", f.seed, "random seed (default 1)");

    CLI::App* stats = app.add_subcommand("stats", "corpus key-features report");
    CLI::App* topics =
        app.add_subcommand("topics", "fit topics (BIC-selected or fixed k)");
    topics->add_option("--k", f.k, "fixed number of topics (0 = select by BIC)");
    topics->add_option("--k-min", f.k_min, "selection range lower end (default 2)");
    topics->add_option("--k-max", f.k_max, "selection range upper end (default 10)");
    topics->add_option("--alpha", f.alpha, "document-topic prior (default 50/k)");
    topics->add_option("--delta", f.delta, "topic-term prior (default 0.1)");
    topics->add_option("--group-by", f.group_by,
                       "aggregate documents by this metadata variable first");

    CLI::App* cooccur =
        app.add_subcommand("cooccur", "LLR rankings and ego networks per focal term");
    cooccur->add_option("--focal", f.focal, "focal term (repeatable)");
    cooccur->add_option("--top-n", f.top_n, "ranked associates to keep (default 10)");
    cooccur->add_option("--depth", f.depth, "ego network depth, 1 or 2 (default 2)");
    cooccur->add_option("--llr-threshold", f.llr_threshold,
                        "gate for depth-2 edges (default 0)");
    cooccur->add_option("--fanout", f.fanout, "ramifications per ring node (default 5)");

    CLI::App* simulate = app.add_subcommand("simulate", "generate a synthetic corpus");
    simulate->add_option("--sim-k", f.sim_k, "number of topics (default 3)");
    simulate->add_option("--sim-terms", f.sim_n_terms, "vocabulary size (default 50)");
    simulate->add_option("--sim-docs", f.sim_n_docs, "number of documents (default 100)");
    simulate->add_option("--sim-doc-len", f.sim_doc_len, "tokens per document (default 80)");

    CLI::App* preprocess =
        app.add_subcommand("preprocess", "emit the tokenized corpus as CSV");
    CLI::App* explore =
        app.add_subcommand("explore", "frequency table, word cloud data, term network");
    explore->add_option("--network-top-n", f.network_top_n,
                        "terms in the co-occurrence network (default 30)");
    explore->add_option("--wordcloud-max-terms", f.wordcloud_max_terms,
                        "terms in the word cloud (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage problems exit 1, --help exits 0
    }

    try {
        textmine::RunConfig cfg = effective_config(f);
        if (stats->parsed()) textmine::cmd_stats(cfg);
        else if (topics->parsed()) textmine::cmd_topics(cfg);
        else if (cooccur->parsed()) textmine::cmd_cooccur(cfg);
        else if (simulate->parsed()) textmine::cmd_simulate(cfg);
        else if (preprocess->parsed()) textmine::cmd_preprocess(cfg);
        else if (explore->parsed()) textmine::cmd_explore(cfg);
        return 0;
    } catch (const textmine::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const textmine::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const textmine::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
