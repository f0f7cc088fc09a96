// Condenses the bundled French sample text to a quarter of its sentences.

#include <iostream>

#include "cortex/cortex.hpp"

int main(int argc, char** argv) {
  const std::string data = CORTEX_DATA_DIR;
  const std::string input = argc > 1 ? argv[1] : data + "/corpus/puces.txt";

  const cortex::PipelineConfig config = cortex::load_language(data + "/resources/fr", "fr");
  const cortex::PreprocessedDocument doc = cortex::preprocess(cortex::load_document(input), config);
  const cortex::Summary summary = cortex::summarize_generic(doc, {25.0, cortex::CompressionUnit::sentences});

  std::cout << "title: " << (doc.titles.empty() ? "" : doc.titles.front().text) << "\n";
  for (const auto& e : summary.entries) std::cout << "[" << e.sentence << "] " << e.local_score << "  " << e.text << "\n";
}
