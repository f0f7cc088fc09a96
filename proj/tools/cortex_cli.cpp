// cortex: batch front end for summarization, question answering over summaries
// and the evaluation reports.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cortex/cortex.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace cortex;

namespace {

#ifndef CORTEX_DATA_DIR
#define CORTEX_DATA_DIR "data"
#endif

struct RunConfig {
  std::string lang = "fr";
  std::string resources;
  std::string stoplist, lemmas, compounds, thesaurus;
  std::string mode = "generic";
  std::string format = "text";
  std::string out;
  std::string encoding = "utf-8";
  double tau = 25.0;
  std::string unit = "sentences";
  unsigned workers = 1;
  std::uint64_t seed = 1;
  bool keep_parentheses = false;
};

// Every file is rendered in memory first and only written once the whole run succeeded.
class Output {
 public:
  explicit Output(const RunConfig& rc) : dir_(rc.out) {}

  void add(const std::string& name, std::string content) { files_.emplace_back(name, std::move(content)); }

  void commit() const {
    if (dir_.empty()) {
      for (const auto& [name, content] : files_) std::cout << content;
      return;
    }
    fs::create_directories(dir_);
    for (const auto& [name, content] : files_) {
      const fs::path target = fs::path(dir_) / name;
      const fs::path tmp = target.string() + ".tmp";
      {
        std::ofstream os(tmp, std::ios::binary);
        os << content;
        if (!os) throw Error("cannot write " + tmp.string());
      }
      fs::rename(tmp, target);
    }
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

// Runs f(i) for i in [0, n) on up to `workers` threads; results land by index.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& f) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

fs::path data_dir() {
  if (const char* env = std::getenv("CORTEX_DATA_DIR")) return env;
  return CORTEX_DATA_DIR;
}

PipelineConfig pipeline(const RunConfig& rc) {
  const ModePreset preset = rc.mode == "qa" ? ModePreset::qa : ModePreset::generic;
  const fs::path dir = rc.resources.empty() ? data_dir() / "resources" / rc.lang : fs::path(rc.resources);
  PipelineConfig c = load_language(dir, rc.lang, preset);
  if (!rc.stoplist.empty()) c.stoplist = load_stoplist(rc.stoplist);
  if (!rc.lemmas.empty()) c.lemma_table = load_lemmas(rc.lemmas);
  if (!rc.compounds.empty()) c.compounds = load_compounds(rc.compounds);
  c.remove_parenthesized = !rc.keep_parentheses;
  c.validate();
  return c;
}

CompressionSpec compression(const RunConfig& rc) {
  CompressionSpec s{rc.tau, rc.unit == "words" ? CompressionUnit::words : CompressionUnit::sentences};
  s.validate();
  return s;
}

std::vector<fs::path> corpus_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw ConfigError("corpus directory " + dir + " does not exist");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && (e.path().extension() == ".txt" || e.path().extension() == ".xml")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ConfigError("corpus directory " + dir + " holds no .txt or .xml file");
  return files;
}

std::vector<PreprocessedDocument> load_all(const std::vector<fs::path>& files, const PipelineConfig& c,
                                           const RunConfig& rc) {
  std::vector<PreprocessedDocument> docs(files.size());
  parallel_for(files.size(), rc.workers, [&](std::size_t i) { docs[i] = preprocess(load_document(files[i], rc.encoding), c); });
  return docs;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::fixed << v;
  return os.str();
}

std::string stem_of(const std::string& source) { return fs::path(source).stem().string(); }

json summary_json(const Summary& s, const PreprocessedDocument* doc) {
  json j;
  if (doc) {
    j["document"] = doc->source_id;
    j["title"] = doc->titles.empty() ? "" : doc->titles.front().text;
    j["title_rule"] = std::string(to_string(doc->title_rule));
    const auto c = doc->counts();
    j["counts"] = {{"words", c.words}, {"distinct_words", c.distinct_words}, {"sentences", c.sentences},
                   {"titles", c.titles}, {"terms", c.terms}};
  }
  j["mode"] = std::string(to_string(s.mode));
  j["tau"] = s.spec.tau;
  j["unit"] = std::string(to_string(s.spec.unit));
  json metrics = json::array();
  for (Metric m : s.local_metrics) metrics.push_back(std::string(label(m)));
  j["metrics"] = metrics;
  json entries = json::array();
  for (const auto& e : s.entries) {
    json x = {{"document", e.document}, {"sentence", e.sentence}, {"text", e.text}, {"local_score", e.local_score}};
    x["global_score"] = e.global_score ? json(*e.global_score) : json(nullptr);
    entries.push_back(std::move(x));
  }
  j["entries"] = entries;
  j["diagnostics"] = s.diagnostics;
  return j;
}

std::string render_summary(const Summary& s, const PreprocessedDocument& doc, const std::string& format) {
  if (format == "json") return summary_json(s, &doc).dump(2) + "\n";
  std::string out;
  if (format == "csv") {
    out = "document,sentence,local_score,text\n";
    for (const auto& e : s.entries)
      out += csv_field(e.document) + "," + std::to_string(e.sentence) + "," + num(e.local_score) + "," + csv_field(e.text) + "\n";
    return out;
  }
  for (const auto& e : s.entries) out += e.text + "\n";
  return out;
}

int cmd_summarize(const RunConfig& rc, const std::vector<std::string>& inputs) {
  const auto config = pipeline(rc);
  const auto spec = compression(rc);
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      for (auto& f : corpus_files(in)) files.push_back(std::move(f));
      continue;
    }
    if (!fs::is_regular_file(in)) throw ConfigError("input " + in + " does not exist");
    files.emplace_back(in);
  }
  const auto docs = load_all(files, config, rc);
  std::vector<std::string> rendered(docs.size());
  std::vector<std::string> warnings(docs.size());
  parallel_for(docs.size(), rc.workers, [&](std::size_t i) {
    const Summary s = summarize_generic(docs[i], spec);
    rendered[i] = render_summary(s, docs[i], rc.format);
    for (const auto& d : s.diagnostics) warnings[i] += "warning: " + d + "\n";
  });
  Output out(rc);
  const std::string ext = rc.format == "json" ? ".json" : rc.format == "csv" ? ".csv" : ".txt";
  for (std::size_t i = 0; i < docs.size(); ++i) out.add(stem_of(docs[i].source_id) + ".summary" + ext, rendered[i]);
  out.commit();
  for (const auto& w : warnings) std::cerr << w;
  return 0;
}

int cmd_qaas(const RunConfig& rc, const std::string& questions_path, const std::string& corpus,
             const std::string& gold_path, const std::string& summary_mode, std::size_t documents, bool exact) {
  if (summary_mode != "generic" && summary_mode != "personalized")
    throw ConfigError("--summary must be generic or personalized");
  const auto config = pipeline(rc);
  QaOptions options;
  options.mode = summary_mode == "generic" ? SummaryMode::generic : SummaryMode::personalized;
  options.spec = compression(rc);
  options.documents = documents;
  const auto questions = load_questions(questions_path);
  const Thesaurus thesaurus = rc.thesaurus.empty() ? Thesaurus() : load_thesaurus(rc.thesaurus, config);
  std::map<std::string, std::vector<std::string>> gold;
  if (!gold_path.empty()) gold = load_gold(gold_path);
  for (const auto& q : questions)
    if (!q.answers.empty() && !gold.contains(q.id)) gold[q.id] = q.answers;

  const auto docs = load_all(corpus_files(corpus), config, rc);
  const SentenceIndex index = SentenceIndex::build(docs);
  std::vector<QaAnswer> answers(questions.size());
  parallel_for(questions.size(), rc.workers, [&](std::size_t i) {
    answers[i] = answer_question(docs, index, questions[i].id, questions[i].text, thesaurus, config, options);
  });

  json report;
  report["summary"] = summary_mode;
  report["tau"] = options.spec.tau;
  report["unit"] = std::string(to_string(options.spec.unit));
  report["documents_per_question"] = documents;
  json items = json::array();
  std::vector<QaJudgement> judged;
  std::size_t top = 0, found = 0;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto& a = answers[i];
    json item = {{"id", questions[i].id}, {"question", questions[i].text}, {"documents", a.documents}};
    json cands = json::array();
    for (const auto& c : a.candidates)
      cands.push_back({{"document", c.document}, {"sentence", c.sentence}, {"score", c.score}, {"text", c.text}});
    item["candidates"] = cands;
    item["confidence"] = a.confidence();
    if (const auto g = gold.find(questions[i].id); g != gold.end()) {
      const QaJudgement j = judge(a, g->second, exact);
      item["top_correct"] = j.top_correct;
      item["found"] = j.found;
      top += j.top_correct ? 1 : 0;
      found += j.found ? 1 : 0;
      judged.push_back(j);
    }
    item["diagnostics"] = a.diagnostics;
    items.push_back(std::move(item));
  }
  report["questions"] = items;
  std::string cws_line;
  if (!judged.empty()) {
    const double score = cws(std::span<const QaJudgement>(judged));
    report["evaluation"] = {{"judged", judged.size()}, {"top_correct", top}, {"found", found}, {"cws", score}};
    cws_line = "CWS " + num(score) + " top_correct " + std::to_string(top) + "/" + std::to_string(judged.size()) +
               " found " + std::to_string(found) + "/" + std::to_string(judged.size()) + "\n";
  }

  Output out(rc);
  if (rc.format == "json" || !rc.out.empty()) {
    out.add("qaas." + summary_mode + ".json", report.dump(2) + "\n");
  } else {
    std::string text;
    for (std::size_t i = 0; i < questions.size(); ++i) {
      text += questions[i].id + "\t" + questions[i].text + "\n";
      if (answers[i].candidates.empty()) text += "\t(no response)\n";
      for (std::size_t k = 0; k < std::min<std::size_t>(3, answers[i].candidates.size()); ++k) {
        const auto& c = answers[i].candidates[k];
        text += "\t" + num(c.score) + "\t" + c.document + "#" + std::to_string(c.sentence) + "\t" + c.text + "\n";
      }
    }
    out.add("qaas." + summary_mode + ".txt", text);
  }
  if (!cws_line.empty()) out.add("qaas." + summary_mode + ".cws.txt", cws_line);
  out.commit();
  return 0;
}

std::string metric_dump(const DocumentScores& r) {
  std::string out = "sentence";
  for (Metric m : r.metrics.metrics) out += "," + std::string(label(m));
  for (Metric m : r.metrics.metrics) out += ",norm_" + std::string(label(m));
  out += ",A\n";
  for (std::size_t s = 0; s < r.metrics.n_sentences; ++s) {
    out += std::to_string(s);
    for (const auto& c : r.metrics.columns) out += "," + num(c[s]);
    for (const auto& c : r.normalized.columns) out += "," + num(c[s]);
    out += "," + num(r.scores[s].score) + "\n";
  }
  return out;
}

int cmd_analyze(const RunConfig& rc, std::vector<std::string> inputs, const std::string& corpus, std::size_t bins,
                bool dump) {
  const auto config = pipeline(rc);
  std::vector<fs::path> files(inputs.begin(), inputs.end());
  if (!corpus.empty())
    for (auto& f : corpus_files(corpus)) files.push_back(f);
  if (files.empty()) throw ConfigError("analyze needs input files or --corpus");
  for (const auto& f : files)
    if (!fs::is_regular_file(f)) throw ConfigError("input " + f.string() + " does not exist");
  const auto docs = load_all(files, config, rc);
  std::vector<DocumentScores> scores(docs.size());
  parallel_for(docs.size(), rc.workers, [&](std::size_t i) {
    if (docs[i].size() > 0) scores[i] = score_document(docs[i]);
  });
  std::vector<NormalizedTable> tables;
  for (std::size_t i = 0; i < docs.size(); ++i)
    if (docs[i].size() > 0) tables.push_back(scores[i].normalized);
  const SensitivityReport rep = sensitivity_report(tables, bins);

  auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
  std::string stats = "metric,count,mean,stddev,kappa_plus,kappa_minus,advantaged,disadvantaged,neutral\n";
  std::string hist = "metric,bin_low,bin_high,count\n";
  std::vector<const Sensitivity*> rows;
  for (const auto& m : rep.metrics) rows.push_back(&m);
  rows.push_back(&rep.decision);
  for (const Sensitivity* s : rows) {
    stats += s->name + "," + std::to_string(s->count) + "," + num(s->mean) + "," + num(s->stddev) + "," + opt(s->kappa_plus) +
             "," + opt(s->kappa_minus) + "," + num(s->advantaged) + "," + num(s->disadvantaged) + "," + num(s->neutral) + "\n";
    for (std::size_t b = 0; b < s->histogram.size(); ++b)
      hist += s->name + "," + num(static_cast<double>(b) / bins) + "," + num(static_cast<double>(b + 1) / bins) + "," +
              std::to_string(s->histogram[b]) + "\n";
  }

  Output out(rc);
  if (rc.out.empty() && rc.format == "text") {
    std::ostringstream os;
    os << "documents " << tables.size() << ", sentences " << rep.sentences << "\n";
    os << std::left << std::setw(8) << "metric" << std::setw(10) << "mean" << std::setw(10) << "stddev" << std::setw(10)
       << "kappa+" << std::setw(10) << "kappa-" << std::setw(10) << "adv" << "disadv\n";
    for (const Sensitivity* s : rows)
      os << std::setw(8) << s->name << std::setw(10) << num(s->mean) << std::setw(10) << num(s->stddev) << std::setw(10)
         << (s->kappa_plus ? num(*s->kappa_plus) : "-") << std::setw(10) << (s->kappa_minus ? num(*s->kappa_minus) : "-")
         << std::setw(10) << num(s->advantaged) << num(s->disadvantaged) << "\n";
    out.add("sensitivity.txt", os.str());
  } else {
    out.add("sensitivity.csv", stats);
    out.add("histograms.csv", hist);
  }
  if (dump && !rc.out.empty())
    for (std::size_t i = 0; i < docs.size(); ++i)
      if (docs[i].size() > 0) out.add(stem_of(docs[i].source_id) + ".metrics.csv", metric_dump(scores[i]));
  out.commit();
  return 0;
}

std::set<std::size_t> extract_from_json(const json& j, const std::string& what) {
  std::set<std::size_t> out;
  if (j.is_object() && j.contains("entries")) {
    for (const auto& e : j.at("entries")) out.insert(e.at("sentence").get<std::size_t>());
  } else if (j.is_object() && j.contains("sentences")) {
    for (const auto& s : j.at("sentences")) out.insert(s.get<std::size_t>());
  } else if (j.is_array()) {
    for (const auto& s : j) out.insert(s.get<std::size_t>());
  } else {
    throw ConfigError(what + " holds neither a summary nor a sentence list");
  }
  return out;
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

int cmd_eval(const RunConfig& rc, const std::string& extract_path, const std::string& reference_path) {
  const auto extract = extract_from_json(read_json(extract_path), extract_path);
  const json ref = read_json(reference_path);
  ReferenceExtract reference;
  reference.sentences = extract_from_json(ref, reference_path);
  if (ref.is_object() && ref.contains("weights")) reference.weights = ref.at("weights").get<std::vector<double>>();
  const PrecisionRecall pr = precision_recall(extract, reference.sentences);
  const Quality q = quality(extract, reference);
  json j = {{"extract", extract},
            {"reference", reference.sentences},
            {"precision", pr.precision},
            {"precision_defined", pr.precision_defined},
            {"recall", pr.recall},
            {"q_raw", q.raw},
            {"q_normalized", q.normalized}};
  Output out(rc);
  if (rc.format == "json")
    out.add("eval.json", j.dump(2) + "\n");
  else
    out.add("eval.txt", "precision " + (pr.precision_defined ? num(pr.precision) : std::string("undefined")) + "\nrecall " +
                            num(pr.recall) + "\nQ " + num(q.raw) + "\nQ_normalized " + num(q.normalized) + "\n");
  out.commit();
  return 0;
}

int cmd_shuffle(const RunConfig& rc, const std::string& input, std::size_t trials) {
  const auto config = pipeline(rc);
  if (!fs::is_regular_file(input)) throw ConfigError("input " + input + " does not exist");
  const PreprocessedDocument doc = preprocess(load_document(input, rc.encoding), config);
  if (doc.size() < 2) throw DomainError("shuffle test needs at least two sentences");
  const auto spec = compression(rc);
  std::vector<ShuffleReport> reports(trials);
  parallel_for(trials, rc.workers, [&](std::size_t t) { reports[t] = shuffle_test(doc, rc.seed + t, spec); });
  std::string text;
  bool ok = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& r = reports[t];
    ok = ok && r.passed();
    text += "trial " + std::to_string(t) + " seed " + std::to_string(rc.seed + t) + ": " + (r.passed() ? "pass" : "FAIL") +
            (r.tie_at_cutoff ? " (tied sentences at the cutoff)" : "") + "\n";
    for (const auto& d : r.divergences) text += "  " + d + "\n";
  }
  Output out(rc);
  out.add("shuffle.txt", text);
  out.commit();
  return ok ? 0 : 3;
}

int cmd_rank(const RunConfig& rc, const std::string& corpus, const std::string& query, std::size_t top) {
  const auto config = pipeline(rc);
  const auto docs = load_all(corpus_files(corpus), config, rc);
  const SentenceIndex index = SentenceIndex::build(docs);
  const auto ranked = index.rank(make_query(query, config), top);
  std::string text;
  for (const auto& r : ranked)
    text += num(r.score) + "\t" + r.document + "#" + std::to_string(r.sentence) + "\t" +
            docs[r.document_index].raw_sentences[r.sentence] + "\n";
  Output out(rc);
  out.add("rank.txt", text);
  out.commit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive summarization with ten sentence metrics and a voting decision rule"};
  app.require_subcommand(1);
  RunConfig rc;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--lang", rc.lang, "Resource language")->check(CLI::IsMember({"fr", "en"}));
    sub->add_option("--resources", rc.resources, "Resource directory (stoplist.txt, lemmas.tsv, ...)");
    sub->add_option("--stoplist", rc.stoplist, "Stoplist file")->check(CLI::ExistingFile);
    sub->add_option("--lemmas", rc.lemmas, "Lemma table (surface<TAB>lemma)")->check(CLI::ExistingFile);
    sub->add_option("--compounds", rc.compounds, "Compound list")->check(CLI::ExistingFile);
    sub->add_option("--mode", rc.mode, "Preset: generic drops numbers, qa keeps them")
        ->check(CLI::IsMember({"generic", "qa"}));
    sub->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", rc.out, "Output directory (default: standard output)");
    sub->add_option("--workers", rc.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--encoding", rc.encoding, "Input encoding (utf-8 or latin1)");
    sub->add_flag("--keep-parentheses", rc.keep_parentheses, "Keep parenthesized text");
  };
  auto compression_opts = [&](CLI::App* sub) {
    sub->add_option("--tau", rc.tau, "Compression rate in percent")->check(CLI::Range(0.0, 100.0));
    sub->add_option("--unit", rc.unit, "Compression unit")->check(CLI::IsMember({"sentences", "words"}));
  };

  std::vector<std::string> inputs;
  auto* summarize = app.add_subcommand("summarize", "Generic extract of each input document");
  common(summarize);
  compression_opts(summarize);
  summarize->add_option("inputs", inputs, "Documents")->required();

  std::string questions, corpus, gold, summary_mode = "personalized";
  std::size_t documents = 3;
  bool exact = false;
  auto* qaas = app.add_subcommand("qaas", "Answer questions from summaries of the retrieved documents");
  common(qaas);
  compression_opts(qaas);
  qaas->add_option("--questions", questions, "Question file")->required()->check(CLI::ExistingFile);
  qaas->add_option("--corpus", corpus, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  qaas->add_option("--gold", gold, "Gold answers (id<TAB>answer|answer)")->check(CLI::ExistingFile);
  qaas->add_option("--thesaurus", rc.thesaurus, "Thesaurus (head<TAB>syn,syn)")->check(CLI::ExistingFile);
  qaas->add_option("--summary", summary_mode, "Summary kind")->check(CLI::IsMember({"generic", "personalized"}));
  qaas->add_option("--documents", documents, "Documents retrieved per question")->check(CLI::PositiveNumber);
  qaas->add_flag("--exact", exact, "Require exact answer match");

  std::size_t bins = 20;
  bool dump = false;
  std::vector<std::string> analyze_inputs;
  auto* analyze = app.add_subcommand("analyze", "Metric sensitivity report");
  common(analyze);
  analyze->add_option("inputs", analyze_inputs, "Documents");
  analyze->add_option("--corpus", corpus, "Corpus directory")->check(CLI::ExistingDirectory);
  analyze->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);
  analyze->add_flag("--dump-metrics", dump, "Write per-document metric tables (with --out)");

  std::string extract, reference;
  auto* eval = app.add_subcommand("eval", "Precision, recall and Q of an extract against a reference");
  eval->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  eval->add_option("--out", rc.out, "Output directory");
  eval->add_option("--extract", extract, "Summary JSON or sentence list")->required()->check(CLI::ExistingFile);
  eval->add_option("--reference", reference, "Reference JSON")->required()->check(CLI::ExistingFile);

  std::string shuffle_input;
  std::size_t trials = 10;
  auto* shuffle = app.add_subcommand("shuffle-test", "Check that sentence order does not change scores or extract");
  common(shuffle);
  compression_opts(shuffle);
  shuffle->add_option("input", shuffle_input, "Document")->required();
  shuffle->add_option("--seed", rc.seed, "First permutation seed");
  shuffle->add_option("--trials", trials, "Number of permutations")->check(CLI::PositiveNumber);

  std::string query;
  std::size_t top = 10;
  auto* rank = app.add_subcommand("rank", "Rank corpus sentences against a question");
  common(rank);
  rank->add_option("--corpus", corpus, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  rank->add_option("--query", query, "Question")->required();
  rank->add_option("--top", top, "Number of sentences")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  // Retrieval keeps numbers unless told otherwise.
  for (auto* sub : {qaas, rank})
    if (*sub && sub->get_option("--mode")->count() == 0) rc.mode = "qa";
  if (*qaas && qaas->get_option("--tau")->count() == 0) rc.tau = 30.0;
  if (*qaas && qaas->get_option("--format")->count() == 0) rc.format = "json";

  try {
    if (*summarize) return cmd_summarize(rc, inputs);
    if (*qaas) return cmd_qaas(rc, questions, corpus, gold, summary_mode, documents, exact);
    if (*analyze) return cmd_analyze(rc, analyze_inputs, corpus, bins, dump);
    if (*eval) return cmd_eval(rc, extract, reference);
    if (*shuffle) return cmd_shuffle(rc, shuffle_input, trials);
    if (*rank) return cmd_rank(rc, corpus, query, top);
  } catch (const std::exception& e) {
    std::cerr << "cortex: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
