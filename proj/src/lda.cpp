#include "textmine/lda.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "json.hpp"

#include "textmine/errors.hpp"
#include "textmine/rng.hpp"

namespace textmine {

namespace {

// Compensated accumulator for the bound. The ELBO is a long sum whose
// iteration-to-iteration differences can sit near machine precision at
// convergence; Kahan summation keeps the trace monotone instead of
// letting rounding noise flip the sign of tiny improvements.
struct Kahan {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Documents are always visited in row-id order, never storage order, so
// that permuting the corpus leaves every accumulated sum bit-identical.
std::vector<int> id_sorted_rows(const DocTermMatrix& dtm) {
    std::vector<int> order(dtm.n_rows());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dtm.rows[a].id < dtm.rows[b].id; });
    return order;
}

// E[log beta_tv] = psi(lambda_tv) - psi(sum_v lambda_tv), stored
// term-major (V x k) so the per-token topic loop is contiguous.
void expected_log_beta(const Mat& lambda, Mat& elb_t) {
    for (int t = 0; t < lambda.n_rows; ++t) {
        double dgsum = digamma(lambda.row_sum(t));
        const double* lr = lambda.row(t);
        for (int v = 0; v < lambda.n_cols; ++v) elb_t.at(v, t) = digamma(lr[v]) - dgsum;
    }
}

// Full variational bound at (lambda, gamma) with phi set to its exact
// optimum given those two, which collapses the z terms to
// sum_j n_j * logsumexp_i(E[log beta_i,vj] + E[log theta_i]).
double eval_bound(const DocTermMatrix& dtm, const std::vector<int>& order,
                  const Mat& lambda, const Mat& gamma, double alpha, double delta) {
    const int k = lambda.n_rows;
    const int V = lambda.n_cols;
    Mat elb_t(V, k);
    expected_log_beta(lambda, elb_t);

    std::vector<double> dg(k), logphi(k);
    Kahan bound;
    for (int r : order) {
        const double* g = gamma.row(r);
        double gsum = 0.0;
        for (int i = 0; i < k; ++i) gsum += g[i];
        double dgsum = digamma(gsum);
        for (int i = 0; i < k; ++i) dg[i] = digamma(g[i]) - dgsum;

        // E log p(theta|alpha) - E log q(theta)
        bound.add(std::lgamma(k * alpha) - k * std::lgamma(alpha) - std::lgamma(gsum));
        for (int i = 0; i < k; ++i) bound.add((alpha - g[i]) * dg[i] + std::lgamma(g[i]));

        for (std::size_t e = dtm.row_ptr[r]; e < dtm.row_ptr[r + 1]; ++e) {
            const double* eb = elb_t.row(dtm.cols[e]);
            for (int i = 0; i < k; ++i) logphi[i] = eb[i] + dg[i];
            bound.add(static_cast<double>(dtm.vals[e]) * log_sum_exp(logphi.data(), k));
        }
    }
    // E log p(beta|delta) - E log q(beta)
    for (int t = 0; t < k; ++t) {
        const double* lr = lambda.row(t);
        bound.add(std::lgamma(V * delta) - V * std::lgamma(delta) -
                  std::lgamma(lambda.row_sum(t)));
        for (int v = 0; v < V; ++v)
            bound.add((delta - lr[v]) * elb_t.at(v, t) + std::lgamma(lr[v]));
    }
    return bound.s;
}

void check_fit_inputs(const DocTermMatrix& dtm, const LdaConfig& c) {
    if (dtm.weighting != Weighting::count)
        throw DomainError("fit_lda requires count weighting, not boolean");
    if (c.k < 1) throw DomainError("k must be at least 1, got " + std::to_string(c.k));
    if (c.k > dtm.n_terms())
        throw DomainError("k=" + std::to_string(c.k) + " exceeds the vocabulary size " +
                          std::to_string(dtm.n_terms()));
    if (!(c.alpha > 0.0)) throw DomainError("alpha must be positive");
    if (!(c.delta > 0.0)) throw DomainError("delta must be positive");
    if (c.em_max_iter < 1 || c.estep_max_iter < 1)
        throw DomainError("iteration caps must be at least 1");
    if (!(c.em_rel_tol > 0.0) || !(c.estep_rel_tol > 0.0))
        throw DomainError("convergence tolerances must be positive");
    if (dtm.n_rows() == 0 || dtm.total() == 0) throw DataError("empty corpus");
}

std::string zero_pad(int value, std::size_t width) {
    std::string s = std::to_string(value);
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.n_rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.n_cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw DataError(std::string("model file: ") + what + " is not a matrix");
    Mat m(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
    for (int r = 0; r < m.n_rows; ++r) {
        const auto& row = j.at(r);
        if (static_cast<int>(row.size()) != m.n_cols)
            throw DataError(std::string("model file: ragged rows in ") + what);
        for (int c = 0; c < m.n_cols; ++c) m.at(r, c) = row.at(c).get<double>();
    }
    return m;
}

} // namespace

LdaModel fit_lda(const DocTermMatrix& dtm, const LdaConfig& config) {
    check_fit_inputs(dtm, config);
    const int k = config.k;
    const int V = dtm.n_terms();
    const int M = dtm.n_rows();
    const double alpha = config.alpha;
    const double delta = config.delta;
    const std::vector<int> order = id_sorted_rows(dtm);

    // lambda_t = delta + (N/k) * ((1-eps)/V + eps * Dirichlet(delta) draw),
    // one RNG substream per topic. The seeded draw is only a perturbation:
    // topics start close to uniform so the data, not the draw, decides
    // where they end up. Starting at the draws themselves plants each
    // topic on a random corner of the simplex, and coordinate ascent then
    // settles into whatever mediocre local optimum is nearest.
    Mat lambda(k, V);
    const double scale = static_cast<double>(dtm.total()) / k;
    const double eps = 0.05;
    for (int t = 0; t < k; ++t) {
        Rng rng(substream_seed(config.seed, static_cast<std::uint64_t>(t)));
        std::vector<double> dir = rng.dirichlet(delta, V);
        double* lr = lambda.row(t);
        for (int v = 0; v < V; ++v)
            lr[v] = delta + scale * ((1.0 - eps) / V + eps * dir[v]);
    }

    // gamma_d = alpha + N_d/k; kept warm across EM iterations so every
    // update, outer or inner, is coordinate ascent from the last state.
    Mat gamma(M, k);
    for (int r = 0; r < M; ++r) {
        double nd = 0.0;
        for (std::size_t e = dtm.row_ptr[r]; e < dtm.row_ptr[r + 1]; ++e)
            nd += static_cast<double>(dtm.vals[e]);
        double* g = gamma.row(r);
        for (int i = 0; i < k; ++i) g[i] = alpha + nd / k;
    }

    Mat elb_t(V, k);      // E[log beta], term-major
    Mat counts_t(V, k);   // expected topic-term counts, term-major
    std::vector<double> dg(k), logphi(k), newg(k);

    FitDiagnostics diag;
    for (int iter = 0; iter < config.em_max_iter; ++iter) {
        expected_log_beta(lambda, elb_t);
        std::fill(counts_t.data.begin(), counts_t.data.end(), 0.0);
        Kahan bound;

        for (int r : order) {
            double* g = gamma.row(r);
            const std::size_t lo = dtm.row_ptr[r], hi = dtm.row_ptr[r + 1];

            for (int inner = 0; inner < config.estep_max_iter; ++inner) {
                double gsum = 0.0;
                for (int i = 0; i < k; ++i) gsum += g[i];
                for (int i = 0; i < k; ++i) dg[i] = digamma(g[i]);
                for (int i = 0; i < k; ++i) newg[i] = alpha;
                for (std::size_t e = lo; e < hi; ++e) {
                    const double* eb = elb_t.row(dtm.cols[e]);
                    for (int i = 0; i < k; ++i) logphi[i] = eb[i] + dg[i];
                    double lse = log_sum_exp(logphi.data(), k);
                    double n = static_cast<double>(dtm.vals[e]);
                    for (int i = 0; i < k; ++i) newg[i] += n * std::exp(logphi[i] - lse);
                }
                double change = 0.0;
                for (int i = 0; i < k; ++i) change += std::fabs(newg[i] - g[i]);
                change /= gsum;
                for (int i = 0; i < k; ++i) g[i] = newg[i];
                if (change < config.estep_rel_tol) break;
            }

            // Final phi pass at the settled gamma: accumulate expected
            // counts and this document's bound terms.
            double gsum = 0.0;
            for (int i = 0; i < k; ++i) gsum += g[i];
            double dgsum = digamma(gsum);
            for (int i = 0; i < k; ++i) dg[i] = digamma(g[i]) - dgsum;
            bound.add(std::lgamma(k * alpha) - k * std::lgamma(alpha) - std::lgamma(gsum));
            for (int i = 0; i < k; ++i) bound.add((alpha - g[i]) * dg[i] + std::lgamma(g[i]));
            for (std::size_t e = lo; e < hi; ++e) {
                const double* eb = elb_t.row(dtm.cols[e]);
                for (int i = 0; i < k; ++i) logphi[i] = eb[i] + dg[i];
                double lse = log_sum_exp(logphi.data(), k);
                double n = static_cast<double>(dtm.vals[e]);
                bound.add(n * lse);
                double* cr = counts_t.row(dtm.cols[e]);
                for (int i = 0; i < k; ++i) cr[i] += n * std::exp(logphi[i] - lse);
            }
        }

        // Global beta terms at the lambda the E-step just used.
        for (int t = 0; t < k; ++t) {
            const double* lr = lambda.row(t);
            bound.add(std::lgamma(V * delta) - V * std::lgamma(delta) -
                      std::lgamma(lambda.row_sum(t)));
            for (int v = 0; v < V; ++v)
                bound.add((delta - lr[v]) * elb_t.at(v, t) + std::lgamma(lr[v]));
        }

        double b = bound.s;
        if (!std::isfinite(b))
            throw NumericalError("variational bound is not finite at EM iteration " +
                                 std::to_string(iter + 1));
        diag.elbo_trace.push_back(b);

        // M-step: lambda_tv = delta + expected counts.
        for (int t = 0; t < k; ++t)
            for (int v = 0; v < V; ++v) lambda.at(t, v) = delta + counts_t.at(v, t);

        if (iter >= 1) {
            double prev = diag.elbo_trace[iter - 1];
            if (std::fabs(b - prev) / std::fabs(prev) < config.em_rel_tol) {
                diag.converged = true;
                break;
            }
        }
    }
    diag.n_iter = static_cast<int>(diag.elbo_trace.size());

    LdaModel m;
    m.config = config;
    m.topic_word = lambda;
    m.beta = lambda;
    m.beta.normalize_rows();
    m.gamma = gamma;
    m.theta = gamma;
    m.theta.normalize_rows();
    m.terms = dtm.vocab.terms;
    m.doc_ids.reserve(M);
    for (int r = 0; r < M; ++r) m.doc_ids.push_back(dtm.rows[r].id);
    // Evaluated through the same routine elbo() uses, so recomputing the
    // bound on the stored model reproduces this value exactly.
    diag.log_likelihood_bound = eval_bound(dtm, order, lambda, gamma, alpha, delta);
    m.diagnostics = diag;
    return m;
}

double elbo(const LdaModel& model, const DocTermMatrix& dtm) {
    const int k = model.topic_word.n_rows;
    if (dtm.weighting != Weighting::count)
        throw DomainError("elbo requires count weighting, not boolean");
    if (dtm.n_terms() != model.topic_word.n_cols)
        throw DomainError("vocabulary size mismatch: model has " +
                          std::to_string(model.topic_word.n_cols) + " terms, matrix has " +
                          std::to_string(dtm.n_terms()));
    if (dtm.n_rows() != model.gamma.n_rows)
        throw DomainError("row count mismatch: model has " +
                          std::to_string(model.gamma.n_rows) + " documents, matrix has " +
                          std::to_string(dtm.n_rows()));

    // Align gamma rows to the matrix by document id so a permuted copy of
    // the fitting corpus evaluates identically.
    std::unordered_map<std::string, int> pos;
    pos.reserve(model.doc_ids.size());
    for (std::size_t i = 0; i < model.doc_ids.size(); ++i)
        pos.emplace(model.doc_ids[i], static_cast<int>(i));
    Mat gamma(dtm.n_rows(), k);
    for (int r = 0; r < dtm.n_rows(); ++r) {
        auto it = pos.find(dtm.rows[r].id);
        if (it == pos.end())
            throw DomainError("document '" + dtm.rows[r].id + "' is not in the model");
        const double* src = model.gamma.row(it->second);
        std::copy(src, src + k, gamma.row(r));
    }
    return eval_bound(dtm, id_sorted_rows(dtm), model.topic_word, gamma,
                      model.config.alpha, model.config.delta);
}

double bic(const LdaModel& model, const DocTermMatrix& dtm) {
    if (dtm.n_terms() != model.beta.n_cols)
        throw DomainError("vocabulary size mismatch between model and matrix");
    std::int64_t n = dtm.total();
    if (n <= 0) throw DataError("empty corpus");
    double p = static_cast<double>(model.beta.n_rows) * (model.beta.n_cols - 1);
    return -2.0 * model.diagnostics.log_likelihood_bound +
           p * std::log(static_cast<double>(n));
}

ModelSelectionResult select_k(const DocTermMatrix& dtm, int k_min, int k_max,
                              const LdaConfig& config_template, int chosen_override) {
    if (k_min < 1 || k_max < k_min)
        throw DomainError("invalid k range [" + std::to_string(k_min) + ", " +
                          std::to_string(k_max) + "]");
    if (chosen_override > 0 && (chosen_override < k_min || chosen_override > k_max))
        throw DomainError("chosen k " + std::to_string(chosen_override) +
                          " is outside the fitted range");
    ModelSelectionResult res;
    double best = std::numeric_limits<double>::infinity();
    for (int k = k_min; k <= k_max; ++k) {
        LdaConfig cfg = config_template;
        cfg.k = k;
        if (!(config_template.alpha > 0.0)) cfg.alpha = 50.0 / k;
        LdaModel m;
        try {
            m = fit_lda(dtm, cfg);
        } catch (const NumericalError& e) {
            throw NumericalError("k=" + std::to_string(k) + ": " + e.what());
        }
        double b = bic(m, dtm);
        res.k_values.push_back(k);
        res.bic.push_back(b);
        if (b < best) { // strict: ties resolve to the smaller k
            best = b;
            res.best_k = k;
        }
    }
    res.chosen_k = chosen_override > 0 ? chosen_override : res.best_k;
    return res;
}

SyntheticCorpus sample_corpus_given_beta(const Mat& true_beta, int n_docs, int doc_len,
                                         double alpha, std::uint64_t seed) {
    const int k = true_beta.n_rows;
    const int V = true_beta.n_cols;
    if (k < 1 || V < 1) throw DomainError("topic-term matrix must be nonempty");
    if (n_docs < 1 || doc_len < 1)
        throw DomainError("document count and length must be at least 1");
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    for (int t = 0; t < k; ++t) {
        if (std::fabs(true_beta.row_sum(t) - 1.0) > 1e-8)
            throw DomainError("topic-term row " + std::to_string(t) + " does not sum to 1");
        for (int v = 0; v < V; ++v)
            if (true_beta.at(t, v) < 0.0)
                throw DomainError("topic-term row " + std::to_string(t) +
                                  " has a negative entry");
    }

    SyntheticCorpus sc;
    sc.true_beta = true_beta;
    sc.true_theta = Mat(n_docs, k);
    sc.true_assignments.resize(n_docs);

    DocTermMatrix& dtm = sc.dtm;
    const std::size_t vw = std::to_string(V).size();
    for (int v = 0; v < V; ++v) dtm.vocab.add("w" + zero_pad(v + 1, vw));
    dtm.weighting = Weighting::count;
    dtm.context = ContextUnit::document;
    dtm.row_ptr.push_back(0);

    const std::size_t dw = std::to_string(n_docs).size();
    std::vector<double> beta_row(V);
    std::vector<std::int64_t> term_counts(V);
    std::vector<std::vector<double>> beta_rows(k, std::vector<double>(V));
    for (int t = 0; t < k; ++t)
        for (int v = 0; v < V; ++v) beta_rows[t][v] = true_beta.at(t, v);

    for (int d = 0; d < n_docs; ++d) {
        // Topic-level streams occupy indices 0..k-1 (see sample_corpus),
        // document streams follow at k+d.
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(k + d)));
        std::vector<double> theta = rng.dirichlet(alpha, k);
        for (int i = 0; i < k; ++i) sc.true_theta.at(d, i) = theta[i];

        std::fill(term_counts.begin(), term_counts.end(), 0);
        std::vector<int>& zs = sc.true_assignments[d];
        zs.resize(doc_len);
        for (int j = 0; j < doc_len; ++j) {
            int z = rng.categorical(theta);
            int w = rng.categorical(beta_rows[z]);
            zs[j] = z;
            ++term_counts[w];
        }

        std::string id = "doc" + zero_pad(d + 1, dw);
        dtm.rows.push_back({id, id});
        for (int v = 0; v < V; ++v) {
            if (term_counts[v] == 0) continue;
            dtm.cols.push_back(v);
            dtm.vals.push_back(term_counts[v]);
        }
        dtm.row_ptr.push_back(dtm.cols.size());
    }
    return sc;
}

SyntheticCorpus sample_corpus(int k, int n_terms, int n_docs, int doc_len,
                              double alpha, double delta, std::uint64_t seed) {
    if (k < 1 || n_terms < 1) throw DomainError("k and vocabulary size must be at least 1");
    if (!(delta > 0.0)) throw DomainError("delta must be positive");
    Mat beta(k, n_terms);
    for (int t = 0; t < k; ++t) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<double> row = rng.dirichlet(delta, n_terms);
        std::copy(row.begin(), row.end(), beta.row(t));
    }
    return sample_corpus_given_beta(beta, n_docs, doc_len, alpha, seed);
}

std::vector<std::vector<std::pair<std::string, double>>>
topic_terms(const LdaModel& model, int n) {
    if (n < 1) throw DomainError("term count must be at least 1");
    const int k = model.beta.n_rows;
    const int V = model.beta.n_cols;
    std::vector<std::vector<std::pair<std::string, double>>> out(k);
    for (int t = 0; t < k; ++t) {
        auto& row = out[t];
        row.reserve(V);
        for (int v = 0; v < V; ++v) row.emplace_back(model.terms[v], model.beta.at(t, v));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        if (static_cast<int>(row.size()) > n) row.resize(n);
    }
    return out;
}

std::vector<std::pair<std::string, std::vector<double>>>
doc_topic_mixture(const LdaModel& model) {
    std::vector<std::pair<std::string, std::vector<double>>> out;
    out.reserve(model.doc_ids.size());
    for (int r = 0; r < model.theta.n_rows; ++r) {
        const double* p = model.theta.row(r);
        out.emplace_back(model.doc_ids[r], std::vector<double>(p, p + model.theta.n_cols));
    }
    return out;
}

TopicMatch match_topics(const Mat& est_beta, const Mat& true_beta) {
    if (!est_beta.same_shape(true_beta))
        throw DomainError("topic matrices differ in shape");
    const int k = est_beta.n_rows;
    const int V = est_beta.n_cols;

    Mat sim(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double dot = 0.0, ni = 0.0, nj = 0.0;
            for (int v = 0; v < V; ++v) {
                dot += est_beta.at(i, v) * true_beta.at(j, v);
                ni += est_beta.at(i, v) * est_beta.at(i, v);
                nj += true_beta.at(j, v) * true_beta.at(j, v);
            }
            double denom = std::sqrt(ni) * std::sqrt(nj);
            sim.at(i, j) = denom > 0.0 ? dot / denom : 0.0;
        }
    }

    TopicMatch match;
    match.permutation.assign(k, -1);
    match.top_term_precision.assign(k, 0.0);
    std::vector<bool> used_est(k, false), used_true(k, false);
    for (int round = 0; round < k; ++round) {
        int bi = -1, bj = -1;
        double best = -1.0;
        for (int i = 0; i < k; ++i) {
            if (used_est[i]) continue;
            for (int j = 0; j < k; ++j) {
                if (used_true[j]) continue;
                if (sim.at(i, j) > best) { // strict: ties keep the first pair found
                    best = sim.at(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        used_est[bi] = true;
        used_true[bj] = true;
        match.permutation[bi] = bj;
    }

    const int m = std::min(10, V);
    auto top_indices = [&](const Mat& mat, int row) {
        std::vector<int> idx(V);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (mat.at(row, a) != mat.at(row, b)) return mat.at(row, a) > mat.at(row, b);
            return a < b;
        });
        idx.resize(m);
        std::sort(idx.begin(), idx.end());
        return idx;
    };
    for (int i = 0; i < k; ++i) {
        std::vector<int> a = top_indices(est_beta, i);
        std::vector<int> b = top_indices(true_beta, match.permutation[i]);
        std::vector<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(both));
        match.top_term_precision[i] = static_cast<double>(both.size()) / m;
    }
    return match;
}

void save_model_json(const LdaModel& model, const std::filesystem::path& path) {
    nlohmann::json j;
    j["config"] = {
        {"k", model.config.k},
        {"alpha", model.config.alpha},
        {"delta", model.config.delta},
        {"seed", model.config.seed},
        {"em_max_iter", model.config.em_max_iter},
        {"em_rel_tol", model.config.em_rel_tol},
        {"estep_max_iter", model.config.estep_max_iter},
        {"estep_rel_tol", model.config.estep_rel_tol},
    };
    j["terms"] = model.terms;
    j["doc_ids"] = model.doc_ids;
    j["beta"] = mat_to_json(model.beta);
    j["gamma"] = mat_to_json(model.gamma);
    j["theta"] = mat_to_json(model.theta);
    j["topic_word"] = mat_to_json(model.topic_word);
    j["diagnostics"] = {
        {"elbo_trace", model.diagnostics.elbo_trace},
        {"n_iter", model.diagnostics.n_iter},
        {"converged", model.diagnostics.converged},
        {"log_likelihood_bound", model.diagnostics.log_likelihood_bound},
    };
    std::ofstream out(path);
    if (!out) throw DataError("cannot write model file " + path.string());
    out << j.dump(2) << "\n";
}

LdaModel load_model_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open model file " + path.string());
    nlohmann::json j;
    LdaModel m;
    try {
        in >> j;
        const auto& c = j.at("config");
        m.config.k = c.at("k").get<int>();
        m.config.alpha = c.at("alpha").get<double>();
        m.config.delta = c.at("delta").get<double>();
        m.config.seed = c.at("seed").get<std::uint64_t>();
        m.config.em_max_iter = c.at("em_max_iter").get<int>();
        m.config.em_rel_tol = c.at("em_rel_tol").get<double>();
        m.config.estep_max_iter = c.at("estep_max_iter").get<int>();
        m.config.estep_rel_tol = c.at("estep_rel_tol").get<double>();
        m.terms = j.at("terms").get<std::vector<std::string>>();
        m.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
        m.beta = mat_from_json(j.at("beta"), "beta");
        m.gamma = mat_from_json(j.at("gamma"), "gamma");
        m.theta = mat_from_json(j.at("theta"), "theta");
        m.topic_word = mat_from_json(j.at("topic_word"), "topic_word");
        const auto& d = j.at("diagnostics");
        m.diagnostics.elbo_trace = d.at("elbo_trace").get<std::vector<double>>();
        m.diagnostics.n_iter = d.at("n_iter").get<int>();
        m.diagnostics.converged = d.at("converged").get<bool>();
        m.diagnostics.log_likelihood_bound = d.at("log_likelihood_bound").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError("invalid model file " + path.string() + ": " + e.what());
    }
    if (m.beta.n_rows != m.config.k || !m.beta.same_shape(m.topic_word) ||
        m.gamma.n_rows != static_cast<int>(m.doc_ids.size()) ||
        m.gamma.n_cols != m.config.k ||
        m.beta.n_cols != static_cast<int>(m.terms.size()))
        throw DataError("invalid model file " + path.string() + ": inconsistent shapes");
    return m;
}

} // namespace textmine
