#pragma once

#include "textmine/runconfig.hpp"

namespace textmine {

// Batch commands behind the CLI subcommands. Each one creates
// config.output_dir, echoes the effective configuration to
// effective_config.ini there, and writes its outputs under stable names
// (listed per command in the implementation). Errors surface as
// DataError / DomainError / NumericalError; none of the outputs embeds a
// timestamp, so a rerun with the same inputs and seed is byte-identical.

// key_features.csv + key_features.txt (documents, tokens, types, TTR,
// hapax share, Guiraud index)
void cmd_stats(const RunConfig& config);

// bic.csv, bic.svg, topic_terms.csv, doc_topics.csv, model.json
void cmd_topics(const RunConfig& config);

// per focal term F: cooccur_F.csv, ego_F.graphml, ego_F.dot, ego_F.svg
void cmd_cooccur(const RunConfig& config);

// simulated_dtm.csv, simulated_vocab.txt, truth.json
void cmd_simulate(const RunConfig& config);

// tokens.csv (doc_id, sentence number, space-joined tokens)
void cmd_preprocess(const RunConfig& config);

// frequencies.csv, wordcloud.csv, term_network.graphml/.dot/.svg
void cmd_explore(const RunConfig& config);

} // namespace textmine
