#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "textmine/dtm.hpp"

namespace textmine {

// Settings for a batch run, read from a sectioned key=value file.
// Defaults follow the reference analysis: minimum word length 3,
// frequency cutoff 20, k searched over 2..10 with alpha = 50/k and
// delta = 0.1.
struct RunConfig {
    // [corpus]
    std::filesystem::path corpus_dir;
    std::filesystem::path metadata_path; // empty: documents only, no metadata
    std::string group_by;                // metadata variable for subcorpus aggregation

    // [preprocess]
    std::filesystem::path stopwords_path;
    std::filesystem::path lemma_path;
    std::filesystem::path collocations_path;
    int min_word_len = 3;

    // [dtm]
    std::int64_t min_term_freq = 20;
    Weighting weighting = Weighting::count;
    ContextUnit context = ContextUnit::sentence; // for co-occurrence / networks

    // [lda]
    int k = 0; // 0: select k over [k_min, k_max] by BIC
    int k_min = 2;
    int k_max = 10;
    double alpha = 0.0; // <= 0: 50/k
    double delta = 0.1;
    std::uint64_t seed = 1;
    int em_max_iter = 100;
    double em_rel_tol = 1e-4;
    int estep_max_iter = 50;
    double estep_rel_tol = 1e-6;

    // [cooccur]
    std::vector<std::string> focal_terms;
    int top_n = 10;
    int depth = 2;
    double llr_threshold = 0.0;
    int fanout = 5;

    // [explore]
    int wordcloud_max_terms = 100;
    double wordcloud_min_size = 10.0;
    double wordcloud_max_size = 60.0;
    int network_top_n = 30;

    // [simulate]
    int sim_k = 3;
    int sim_n_terms = 50;
    int sim_n_docs = 100;
    int sim_doc_len = 80;
    double sim_alpha = 0.5;
    double sim_delta = 0.1;

    // [output]
    std::filesystem::path output_dir = "out";
};

// Parses the sectioned key=value format ('#' and ';' start comments).
// Unknown sections or keys and malformed values raise DataError with the
// line number.
RunConfig parse_config(const std::string& text, const std::string& origin);
RunConfig load_config(const std::filesystem::path& path);

// Writes every setting back out in canonical order; reloading the result
// reproduces the configuration.
void write_effective_config(const RunConfig& config, const std::filesystem::path& path);

} // namespace textmine
