#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "textmine/dtm.hpp"
#include "textmine/mathutil.hpp"

namespace textmine {

struct LdaConfig {
    int k = 2;
    double alpha = 0.0; // document-topic prior; 50/k when resolved from a template
    double delta = 0.1; // topic-term prior
    std::uint64_t seed = 1;
    int em_max_iter = 100;
    double em_rel_tol = 1e-4;
    int estep_max_iter = 50;
    double estep_rel_tol = 1e-6;

    // Conventional defaults: alpha = 50/k (Griffiths & Steyvers 2004),
    // delta = 0.1.
    static LdaConfig defaults(int k) {
        LdaConfig c;
        c.k = k;
        c.alpha = 50.0 / k;
        return c;
    }
};

struct FitDiagnostics {
    std::vector<double> elbo_trace; // one value per EM iteration, nondecreasing
    int n_iter = 0;
    bool converged = false;
    double log_likelihood_bound = 0.0; // final bound on the stored model state
};

struct LdaModel {
    Mat beta;       // k x V topic-term probabilities, rows sum to 1
    Mat gamma;      // M x k variational Dirichlet parameters
    Mat theta;      // M x k document-topic mixtures (gamma normalized)
    Mat topic_word; // k x V posterior pseudo-counts (delta + expected counts)
    LdaConfig config;
    FitDiagnostics diagnostics;
    std::vector<std::string> terms;
    std::vector<std::string> doc_ids;
};

struct SyntheticCorpus {
    DocTermMatrix dtm;
    Mat true_beta;  // k x V
    Mat true_theta; // M x k
    std::vector<std::vector<int>> true_assignments; // per-document token topics
};

struct ModelSelectionResult {
    std::vector<int> k_values;
    std::vector<double> bic;
    int best_k = 0;   // argmin of bic, ties to the smaller k
    int chosen_k = 0; // caller override or best_k
};

struct TopicMatch {
    std::vector<int> permutation;          // estimated topic -> true topic
    std::vector<double> top_term_precision; // top-10 term overlap per pair
};

// Generative sampler: beta_t ~ Dirichlet(delta), per document
// theta ~ Dirichlet(alpha), per token z ~ Mult(theta), w ~ Mult(beta_z).
// Identical seed gives identical output.
SyntheticCorpus sample_corpus(int k, int n_terms, int n_docs, int doc_len,
                              double alpha, double delta, std::uint64_t seed);

// Same but with a caller-supplied topic-term matrix.
SyntheticCorpus sample_corpus_given_beta(const Mat& true_beta, int n_docs, int doc_len,
                                         double alpha, std::uint64_t seed);

// Variational EM for smoothed LDA (Blei, Ng & Jordan 2003). Per-document
// E-step alternates phi and gamma updates until the relative gamma change
// drops below estep_rel_tol; the M-step re-estimates the topic-term
// pseudo-counts as delta + expected counts. The outer loop stops when the
// relative ELBO change drops below em_rel_tol. Every update is exact
// coordinate ascent on the bound, so the trace is nondecreasing.
LdaModel fit_lda(const DocTermMatrix& dtm, const LdaConfig& config);

// Variational lower bound on log P(corpus) evaluated at the model's
// stored state (phi is recomputed from beta and gamma). For a fitted
// model this reproduces diagnostics.log_likelihood_bound exactly.
double elbo(const LdaModel& model, const DocTermMatrix& dtm);

// BIC = -2 * bound + p * ln(n) with p = k*(V-1) free topic-term
// parameters (theta is integrated by the bound) and n = total tokens.
double bic(const LdaModel& model, const DocTermMatrix& dtm);

// Fits every k in [k_min, k_max] from the same config template (template
// alpha <= 0 means the 50/k default per k) and records BIC. chosen_override
// > 0 forces chosen_k regardless of best_k.
ModelSelectionResult select_k(const DocTermMatrix& dtm, int k_min, int k_max,
                              const LdaConfig& config_template, int chosen_override = 0);

// Per topic, the n highest-probability terms (descending, ties
// lexicographic).
std::vector<std::vector<std::pair<std::string, double>>>
topic_terms(const LdaModel& model, int n);

// Theta rows labeled by document id.
std::vector<std::pair<std::string, std::vector<double>>>
doc_topic_mixture(const LdaModel& model);

// Greedy cosine-similarity assignment of estimated to true topics without
// reuse, with top-10 term overlap per matched pair.
TopicMatch match_topics(const Mat& est_beta, const Mat& true_beta);

void save_model_json(const LdaModel& model, const std::filesystem::path& path);
LdaModel load_model_json(const std::filesystem::path& path);

} // namespace textmine
