#include "textmine/runconfig.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "textmine/csvio.hpp"
#include "textmine/errors.hpp"

namespace textmine {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw DataError(origin + ":" + std::to_string(line) + ": " + msg);
}

int to_int(const std::string& v, const std::string& origin, int line) {
    try {
        std::size_t used = 0;
        int x = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(origin, line, "not an integer: '" + v + "'");
    }
}

std::int64_t to_int64(const std::string& v, const std::string& origin, int line) {
    try {
        std::size_t used = 0;
        std::int64_t x = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(origin, line, "not an integer: '" + v + "'");
    }
}

std::uint64_t to_uint64(const std::string& v, const std::string& origin, int line) {
    try {
        std::size_t used = 0;
        unsigned long long x = std::stoull(v, &used);
        if (used != v.size() || (!v.empty() && v[0] == '-')) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(origin, line, "not a nonnegative integer: '" + v + "'");
    }
}

double to_double(const std::string& v, const std::string& origin, int line) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(origin, line, "not a number: '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(v);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            static const char* known[] = {"corpus",  "preprocess", "dtm",      "lda",
                                          "cooccur", "explore",    "simulate", "output"};
            bool ok = false;
            for (const char* s : known) ok = ok || section == s;
            if (!ok) fail(origin, lineno, "unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty()) fail(origin, lineno, "key outside any section: " + key);

        auto is = [&](const char* sec, const char* k) { return section == sec && key == k; };
        if (is("corpus", "dir")) cfg.corpus_dir = value;
        else if (is("corpus", "metadata")) cfg.metadata_path = value;
        else if (is("corpus", "group_by")) cfg.group_by = value;
        else if (is("preprocess", "stopwords")) cfg.stopwords_path = value;
        else if (is("preprocess", "lemmas")) cfg.lemma_path = value;
        else if (is("preprocess", "collocations")) cfg.collocations_path = value;
        else if (is("preprocess", "min_word_len")) cfg.min_word_len = to_int(value, origin, lineno);
        else if (is("dtm", "min_term_freq")) cfg.min_term_freq = to_int64(value, origin, lineno);
        else if (is("dtm", "weighting")) {
            if (value == "count") cfg.weighting = Weighting::count;
            else if (value == "boolean") cfg.weighting = Weighting::boolean;
            else fail(origin, lineno, "weighting must be count or boolean, got '" + value + "'");
        } else if (is("dtm", "context")) {
            if (value == "document") cfg.context = ContextUnit::document;
            else if (value == "sentence") cfg.context = ContextUnit::sentence;
            else fail(origin, lineno, "context must be document or sentence, got '" + value + "'");
        } else if (is("lda", "k")) cfg.k = to_int(value, origin, lineno);
        else if (is("lda", "k_min")) cfg.k_min = to_int(value, origin, lineno);
        else if (is("lda", "k_max")) cfg.k_max = to_int(value, origin, lineno);
        else if (is("lda", "alpha")) cfg.alpha = to_double(value, origin, lineno);
        else if (is("lda", "delta")) cfg.delta = to_double(value, origin, lineno);
        else if (is("lda", "seed")) cfg.seed = to_uint64(value, origin, lineno);
        else if (is("lda", "em_max_iter")) cfg.em_max_iter = to_int(value, origin, lineno);
        else if (is("lda", "em_rel_tol")) cfg.em_rel_tol = to_double(value, origin, lineno);
        else if (is("lda", "estep_max_iter")) cfg.estep_max_iter = to_int(value, origin, lineno);
        else if (is("lda", "estep_rel_tol")) cfg.estep_rel_tol = to_double(value, origin, lineno);
        else if (is("cooccur", "focal_terms")) cfg.focal_terms = split_list(value);
        else if (is("cooccur", "top_n")) cfg.top_n = to_int(value, origin, lineno);
        else if (is("cooccur", "depth")) cfg.depth = to_int(value, origin, lineno);
        else if (is("cooccur", "llr_threshold")) cfg.llr_threshold = to_double(value, origin, lineno);
        else if (is("cooccur", "fanout")) cfg.fanout = to_int(value, origin, lineno);
        else if (is("explore", "wordcloud_max_terms")) cfg.wordcloud_max_terms = to_int(value, origin, lineno);
        else if (is("explore", "wordcloud_min_size")) cfg.wordcloud_min_size = to_double(value, origin, lineno);
        else if (is("explore", "wordcloud_max_size")) cfg.wordcloud_max_size = to_double(value, origin, lineno);
        else if (is("explore", "network_top_n")) cfg.network_top_n = to_int(value, origin, lineno);
        else if (is("simulate", "k")) cfg.sim_k = to_int(value, origin, lineno);
        else if (is("simulate", "n_terms")) cfg.sim_n_terms = to_int(value, origin, lineno);
        else if (is("simulate", "n_docs")) cfg.sim_n_docs = to_int(value, origin, lineno);
        else if (is("simulate", "doc_len")) cfg.sim_doc_len = to_int(value, origin, lineno);
        else if (is("simulate", "alpha")) cfg.sim_alpha = to_double(value, origin, lineno);
        else if (is("simulate", "delta")) cfg.sim_delta = to_double(value, origin, lineno);
        else if (is("output", "dir")) cfg.output_dir = value;
        else fail(origin, lineno, "unknown key '" + key + "' in section [" + section + "]");
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string());
}

void write_effective_config(const RunConfig& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    auto num = [](double x) { return csv::fmt_general(x, 12); };
    std::string focal;
    for (std::size_t i = 0; i < c.focal_terms.size(); ++i)
        focal += (i ? ", " : "") + c.focal_terms[i];

    out << "[corpus]\n"
        << "dir = " << c.corpus_dir.string() << "\n"
        << "metadata = " << c.metadata_path.string() << "\n"
        << "group_by = " << c.group_by << "\n\n"
        << "[preprocess]\n"
        << "stopwords = " << c.stopwords_path.string() << "\n"
        << "lemmas = " << c.lemma_path.string() << "\n"
        << "collocations = " << c.collocations_path.string() << "\n"
        << "min_word_len = " << c.min_word_len << "\n\n"
        << "[dtm]\n"
        << "min_term_freq = " << c.min_term_freq << "\n"
        << "weighting = " << (c.weighting == Weighting::count ? "count" : "boolean") << "\n"
        << "context = " << (c.context == ContextUnit::document ? "document" : "sentence")
        << "\n\n"
        << "[lda]\n"
        << "k = " << c.k << "\n"
        << "k_min = " << c.k_min << "\n"
        << "k_max = " << c.k_max << "\n"
        << "alpha = " << num(c.alpha) << "\n"
        << "delta = " << num(c.delta) << "\n"
        << "seed = " << c.seed << "\n"
        << "em_max_iter = " << c.em_max_iter << "\n"
        << "em_rel_tol = " << num(c.em_rel_tol) << "\n"
        << "estep_max_iter = " << c.estep_max_iter << "\n"
        << "estep_rel_tol = " << num(c.estep_rel_tol) << "\n\n"
        << "[cooccur]\n"
        << "focal_terms = " << focal << "\n"
        << "top_n = " << c.top_n << "\n"
        << "depth = " << c.depth << "\n"
        << "llr_threshold = " << num(c.llr_threshold) << "\n"
        << "fanout = " << c.fanout << "\n\n"
        << "[explore]\n"
        << "wordcloud_max_terms = " << c.wordcloud_max_terms << "\n"
        << "wordcloud_min_size = " << num(c.wordcloud_min_size) << "\n"
        << "wordcloud_max_size = " << num(c.wordcloud_max_size) << "\n"
        << "network_top_n = " << c.network_top_n << "\n\n"
        << "[simulate]\n"
        << "k = " << c.sim_k << "\n"
        << "n_terms = " << c.sim_n_terms << "\n"
        << "n_docs = " << c.sim_n_docs << "\n"
        << "doc_len = " << c.sim_doc_len << "\n"
        << "alpha = " << num(c.sim_alpha) << "\n"
        << "delta = " << num(c.sim_delta) << "\n\n"
        << "[output]\n"
        << "dir = " << c.output_dir.string() << "\n";
}

} // namespace textmine
