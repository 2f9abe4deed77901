/** Copyright 2026 The pathkeep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pathkeep/corpus.h"
#include "pathkeep/error.h"
#include "pathkeep/expansion.h"
#include "pathkeep/frequency_scorer.h"
#include "pathkeep/ingest.h"
#include "pathkeep/records.h"
#include "pathkeep/remote_scorer.h"
#include "pathkeep/snapshot.h"

namespace pathkeep::cli {

namespace {

constexpr const char* kEnvPrefix = "PATHKEEP_";

std::string env_name(const std::string& flag) {
  std::string name = kEnvPrefix;
  for (char c : flag) name.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
  return name;
}

/// Fails with a usage error that names the missing path.
void require_file(const std::string& path, const char* what) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorKind::kNotFound, std::string(what) + " not found: '" + path + "'");
  }
}

std::unique_ptr<Scorer> make_scorer(const std::string& descriptor) {
  if (descriptor.rfind("oracle:", 0) == 0) {
    auto path = descriptor.substr(7);
    require_file(path, "oracle table");
    return std::make_unique<FrequencyScorer>(FrequencyTable::load(path));
  }
  if (descriptor.rfind("remote:", 0) == 0) {
    RemoteScorerConfig config;
    config.base_url = descriptor.substr(7);
    return std::make_unique<RemoteScorer>(config);
  }
  throw Error(ErrorKind::kInvalidArgument,
              "scorer must be 'oracle:<table path>' or 'remote:<base URL>', got '" + descriptor + "'");
}

/// Output sink: a file when -o is given, otherwise `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error(ErrorKind::kNotFound, "cannot write output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct IngestOptions {
  std::string dump;
  std::string fixture;
  std::string output;
  std::string templates;
  bool strict = false;
};

struct AnswerOptions {
  std::string question;
  std::string batch;
  std::string graph;
  std::string scorer;
  std::string direction = "both";
  std::string stopwords;
  std::string output;
  std::size_t hops = 3;
  std::size_t beam = 100;
  std::size_t top = 1;
  std::size_t max_ngram = 4;
  std::size_t workers = 1;
  bool pretty = false;
};

struct CorpusOptions {
  std::string qa;
  std::string graph;
  std::string output;
  std::string stopwords;
  std::size_t hops = 3;
  std::size_t max = 20000;
  std::uint64_t seed = 0;
  double mask_rate = 0.15;
};

struct ScoreOptions {
  std::string question;
  std::string answer;
  std::string scorer;
};

int cmd_ingest(const IngestOptions& o, std::ostream& out) {
  if (o.dump.empty() == o.fixture.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "give exactly one of <dump> or --fixture");
  }
  std::optional<TemplateTable> templates;
  if (!o.templates.empty()) {
    require_file(o.templates, "template table");
    std::ifstream in(o.templates);
    templates = TemplateTable::load(in);
  }
  const TemplateTable& table = templates ? *templates : TemplateTable::builtin();

  IngestResult result;
  if (!o.fixture.empty()) {
    require_file(o.fixture, "fixture file");
    auto in = open_input(o.fixture);
    result = load_fixture(*in, table);
  } else {
    require_file(o.dump, "assertion dump");
    auto in = open_input(o.dump);
    IngestConfig config;
    config.strict = o.strict;
    config.templates = &table;
    result = ingest_conceptnet(*in, config);
  }
  save_snapshot(result.graph, o.output);
  out << result.report.to_text() << "nodes=" << result.graph.node_count() << '\n'
      << "edges=" << result.graph.edge_count() << '\n';
  return kExitOk;
}

SearchConfig search_config(const AnswerOptions& o) {
  SearchConfig config;
  config.max_hops = o.hops;
  config.beam_width = o.beam;
  config.answers_returned = o.top;
  config.direction = parse_direction_policy(o.direction);
  config.link.max_ngram = o.max_ngram;
  if (!o.stopwords.empty()) {
    require_file(o.stopwords, "stopword list");
    std::ifstream in(o.stopwords);
    config.link.stopwords = load_stopwords(in);
  }
  config.validate();
  return config;
}

int cmd_answer(const AnswerOptions& o, std::ostream& out) {
  if (o.question.empty() == o.batch.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "give exactly one of <question> or --batch");
  }
  const auto config = search_config(o);
  require_file(o.graph, "graph snapshot");
  const auto graph = load_snapshot(o.graph);
  const auto scorer = make_scorer(o.scorer);
  const RunSnapshot run{o.graph, o.scorer, config};

  std::vector<std::string> questions;
  if (!o.batch.empty()) {
    require_file(o.batch, "question batch file");
    std::ifstream in(o.batch);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) questions.push_back(line);
    }
  } else {
    questions.push_back(o.question);
  }

  std::vector<std::string> rendered(questions.size());
  std::mutex failure_mutex;
  std::exception_ptr failure;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < questions.size(); i = next.fetch_add(1)) {
      {
        std::lock_guard lock(failure_mutex);
        if (failure) return;
      }
      try {
        auto result = search(questions[i], graph, *scorer, config);
        rendered[i] = o.pretty ? pretty_answer(result, graph) : answer_record(result, graph, run);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kNoLinkableEntities ||
            e.kind() == ErrorKind::kInvalidArgument) {
          rendered[i] = o.pretty ? "Question: " + questions[i] + "\nAnswer: (" + e.what() + ")\n"
                                 : failure_record(questions[i], to_string(e.kind()), e.what(), run);
        } else {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(o.workers, 1, std::max<std::size_t>(1, questions.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < workers; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  Sink sink(o.output, out);
  for (const auto& line : rendered) {
    sink.stream() << line;
    if (!o.pretty) sink.stream() << '\n';
  }
  return kExitOk;
}

int cmd_corpus(const CorpusOptions& o, std::ostream& out) {
  require_file(o.qa, "QA file");
  require_file(o.graph, "graph snapshot");
  const auto graph = load_snapshot(o.graph);
  std::ifstream in(o.qa);
  const auto pairs = read_qa_pairs(in);
  CorpusConfig config;
  config.max_hops = o.hops;
  config.max_sentences = o.max;
  config.seed = o.seed;
  config.mask_rate = o.mask_rate;
  if (!o.stopwords.empty()) {
    require_file(o.stopwords, "stopword list");
    std::ifstream sw(o.stopwords);
    config.link.stopwords = load_stopwords(sw);
  }
  const auto result = generate_corpus(pairs, graph, config);
  {
    Sink sink(o.output, out);
    write_corpus(result.sentences, sink.stream());
  }
  // Keep stdout clean for the corpus itself when no -o is given.
  if (!o.output.empty()) out << result.report.to_text();
  return kExitOk;
}

int cmd_score(const ScoreOptions& o, std::ostream& out) {
  if (o.question.empty() || o.answer.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "question and answer must be non-empty");
  }
  const auto scorer = make_scorer(o.scorer);
  const auto score = score_answer_sentence(*scorer, o.question, o.answer);
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", score.value);
  out << "score=" << buffer << " tokens=" << score.tokens_scored << '\n';
  return kExitOk;
}

int exit_code_for(const Error& e) {
  if (e.is_scorer_failure()) return kExitScorerError;
  switch (e.kind()) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kNotFound:
      return kExitUsageError;
    default:
      return kExitDataError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pathkeep: knowledge-graph reasoning path search"};
  app.name("pathkeep");
  app.require_subcommand(1);
  app.set_config("--config", "", "INI/TOML config file (flags take precedence)");

  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a graph snapshot from a dump or fixture");
  ingest_cmd->add_option("dump", ingest.dump, "ConceptNet 5.6 assertions (.csv or .csv.gz)");
  ingest_cmd->add_option("--fixture", ingest.fixture, "head<TAB>relation<TAB>tail fixture");
  ingest_cmd->add_option("-o,--output", ingest.output, "Snapshot output path")
      ->required()
      ->envname(env_name("output"));
  ingest_cmd->add_option("--templates", ingest.templates, "Relation template table")
      ->envname(env_name("templates"));
  ingest_cmd->add_flag("--strict", ingest.strict, "Abort on the first malformed line")
      ->envname(env_name("strict"));

  AnswerOptions answer;
  auto* answer_cmd = app.add_subcommand("answer", "Answer a question or a batch of questions");
  answer_cmd->add_option("question", answer.question, "Question text");
  answer_cmd->add_option("--batch", answer.batch, "File with one question per line");
  answer_cmd->add_option("--graph", answer.graph, "Graph snapshot")
      ->required()
      ->envname(env_name("graph"));
  answer_cmd->add_option("--scorer", answer.scorer, "oracle:<table> or remote:<url>")
      ->required()
      ->envname(env_name("scorer"));
  answer_cmd->add_option("--hops", answer.hops, "Maximum path length")
      ->check(CLI::PositiveNumber)
      ->envname(env_name("hops"));
  answer_cmd->add_option("--beam", answer.beam, "Paths kept per hop")
      ->check(CLI::PositiveNumber)
      ->envname(env_name("beam"));
  answer_cmd->add_option("--top", answer.top, "Ranked answers per record")
      ->check(CLI::PositiveNumber)
      ->envname(env_name("top"));
  answer_cmd->add_option("--direction", answer.direction, "Edge traversal: out or both")
      ->check(CLI::IsMember({"out", "both"}))
      ->envname(env_name("direction"));
  answer_cmd->add_option("--max-ngram", answer.max_ngram, "Longest entity mention in tokens")
      ->check(CLI::PositiveNumber)
      ->envname(env_name("max_ngram"));
  answer_cmd->add_option("--stopwords", answer.stopwords, "Stopword list file")
      ->envname(env_name("stopwords"));
  answer_cmd->add_option("--workers", answer.workers, "Concurrent questions in batch mode")
      ->check(CLI::PositiveNumber)
      ->envname(env_name("workers"));
  answer_cmd->add_flag("--pretty", answer.pretty, "Human-readable output")
      ->envname(env_name("pretty"));
  answer_cmd->add_option("-o,--output", answer.output, "Write records to a file")
      ->envname(env_name("output"));

  CorpusOptions corpus;
  auto* corpus_cmd = app.add_subcommand("corpus", "Generate the masked finetuning corpus");
  corpus_cmd->add_option("qa", corpus.qa, "question<TAB>answer file")->required();
  corpus_cmd->add_option("--graph", corpus.graph, "Graph snapshot")
      ->required()
      ->envname(env_name("graph"));
  corpus_cmd->add_option("--seed", corpus.seed, "Masking seed")
      ->required()
      ->envname(env_name("seed"));
  corpus_cmd->add_option("--hops", corpus.hops, "Maximum path length")
      ->check(CLI::PositiveNumber)
      ->envname(env_name("hops"));
  corpus_cmd->add_option("--max", corpus.max, "Sentence cap")
      ->check(CLI::PositiveNumber)
      ->envname(env_name("max"));
  corpus_cmd->add_option("--mask-rate", corpus.mask_rate, "Fraction of tokens masked")
      ->check(CLI::Range(0.0, 1.0))
      ->envname(env_name("mask_rate"));
  corpus_cmd->add_option("--stopwords", corpus.stopwords, "Stopword list file")
      ->envname(env_name("stopwords"));
  corpus_cmd->add_option("-o,--output", corpus.output, "Corpus output path")
      ->envname(env_name("output"));

  ScoreOptions score;
  auto* score_cmd = app.add_subcommand("score", "Score question + answer as one sentence");
  score_cmd->add_option("question", score.question, "Question text")->required();
  score_cmd->add_option("answer", score.answer, "Answer text")->required();
  score_cmd->add_option("--scorer", score.scorer, "oracle:<table> or remote:<url>")
      ->required()
      ->envname(env_name("scorer"));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "pathkeep: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    if (*ingest_cmd) return cmd_ingest(ingest, out);
    if (*answer_cmd) return cmd_answer(answer, out);
    if (*corpus_cmd) return cmd_corpus(corpus, out);
    if (*score_cmd) return cmd_score(score, out);
  } catch (const Error& e) {
    err << "pathkeep: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "pathkeep: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsageError;
}

}  // namespace pathkeep::cli
