#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace textmine {

struct Document {
    std::string id;
    std::string text;
    // variable name -> value; missing values are stored as "".
    std::map<std::string, std::string> metadata;
};

struct Corpus {
    std::vector<Document> documents;
    // "raw" or "aggregated-by:<variable>"
    std::string provenance = "raw";
};

// Loads one document per <id>.txt in corpus_dir and joins a delimited
// metadata table (comma, tab or semicolon; auto-detected; first row is the
// header and must contain a doc_id column). Documents come back ordered by
// id. A metadata row without a matching file is ignored with a warning on
// stderr; a file without a metadata row is an error.
Corpus load_corpus(const std::filesystem::path& corpus_dir,
                   const std::filesystem::path& metadata_path);

// Merges documents sharing a value of `variable` into one document per
// distinct value (lexicographic group order). Member texts are joined with
// single newlines in input order; the group value becomes the id.
Corpus aggregate_by(const Corpus& corpus, const std::string& variable);

} // namespace textmine
