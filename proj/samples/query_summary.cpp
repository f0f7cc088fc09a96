// Builds a query-biased multi-document summary for one question.

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "cortex/cortex.hpp"

int main(int argc, char** argv) {
  const std::string data = CORTEX_DATA_DIR;
  const std::string question = argc > 1 ? argv[1] : "Who discovered the moons of Jupiter?";

  const auto config = cortex::load_language(data + "/resources/en", "en", cortex::ModePreset::qa);
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(data + "/qa/docs")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<cortex::PreprocessedDocument> docs;
  for (const auto& f : files) docs.push_back(cortex::preprocess(cortex::load_document(f), config));

  const auto index = cortex::SentenceIndex::build(docs);
  std::vector<cortex::PreprocessedDocument> relevant;
  for (std::size_t d : index.select_documents(cortex::make_query(question, config), 3)) relevant.push_back(docs[d]);

  const auto thesaurus = cortex::load_thesaurus(data + "/qa/thesaurus.tsv", config);
  const auto query = cortex::expand_query(question, thesaurus, config);
  const auto summary = cortex::rerank_global(cortex::summarize_personalized(relevant, query, {30.0}), query);

  for (const auto& e : summary.entries)
    std::cout << *e.global_score << "  " << e.document << "#" << e.sentence << "  " << e.text << "\n";
}
