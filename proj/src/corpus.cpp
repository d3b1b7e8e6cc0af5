#include "textmine/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "textmine/csvio.hpp"
#include "textmine/errors.hpp"
#include "textmine/utf8.hpp"

namespace fs = std::filesystem;

namespace textmine {

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Corpus load_corpus(const fs::path& corpus_dir, const fs::path& metadata_path) {
    if (!fs::is_directory(corpus_dir))
        throw DataError("corpus directory not found: " + corpus_dir.string());

    std::vector<std::string> ids;
    for (const auto& entry : fs::directory_iterator(corpus_dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".txt") continue;
        ids.push_back(entry.path().stem().string());
    }
    if (ids.empty())
        throw DataError("empty corpus: no .txt files in " + corpus_dir.string());
    std::sort(ids.begin(), ids.end());

    csv::Table table = csv::read_table(metadata_path);
    auto id_col = std::find(table.header.begin(), table.header.end(), "doc_id");
    if (id_col == table.header.end())
        throw DataError("metadata table has no doc_id column: " + metadata_path.string());
    std::size_t id_idx = id_col - table.header.begin();

    std::map<std::string, std::vector<std::string>> meta_rows;
    for (const auto& row : table.rows) {
        const std::string& doc_id = row[id_idx];
        if (meta_rows.count(doc_id))
            throw DataError("duplicate doc_id in metadata: " + doc_id);
        meta_rows[doc_id] = row;
    }

    Corpus corpus;
    std::set<std::string> used;
    for (const auto& id : ids) {
        auto it = meta_rows.find(id);
        if (it == meta_rows.end())
            throw DataError("no metadata row for document: " + id);
        used.insert(id);

        fs::path file = corpus_dir / (id + ".txt");
        std::string text = read_file(file);
        if (!utf8::valid(text))
            throw DataError("file is not valid UTF-8: " + file.string());

        Document doc;
        doc.id = id;
        doc.text = std::move(text);
        for (std::size_t c = 0; c < table.header.size(); ++c) {
            if (c == id_idx) continue;
            doc.metadata[table.header[c]] = it->second[c];
        }
        corpus.documents.push_back(std::move(doc));
    }

    for (const auto& [doc_id, row] : meta_rows) {
        (void)row;
        if (!used.count(doc_id))
            std::cerr << "warning: metadata row '" << doc_id
                      << "' has no matching document; ignored\n";
    }
    return corpus;
}

Corpus aggregate_by(const Corpus& corpus, const std::string& variable) {
    std::vector<std::string> missing;
    for (const auto& doc : corpus.documents) {
        auto it = doc.metadata.find(variable);
        if (it == doc.metadata.end())
            throw DomainError("unknown metadata variable: " + variable);
        if (it->second.empty()) missing.push_back(doc.id);
    }
    if (!missing.empty()) {
        std::string msg = "empty value for '" + variable + "' in documents:";
        for (const auto& id : missing) msg += " " + id;
        throw DomainError(msg);
    }

    // std::map keeps groups in lexicographic order
    std::map<std::string, std::vector<const Document*>> groups;
    for (const auto& doc : corpus.documents)
        groups[doc.metadata.at(variable)].push_back(&doc);

    Corpus out;
    out.provenance = "aggregated-by:" + variable;
    for (const auto& [value, members] : groups) {
        Document doc;
        doc.id = value;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i > 0) doc.text += '\n';
            doc.text += members[i]->text;
        }
        doc.metadata[variable] = value;
        out.documents.push_back(std::move(doc));
    }
    return out;
}

} // namespace textmine
