#include "sentcomp/pipeline.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "sentcomp/corpus_io.h"
#include "sentcomp/errors.h"
#include "sentcomp/ngram_model.h"
#include "sentcomp/utf8.h"

namespace sentcomp {

namespace fs = std::filesystem;

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::vector<std::string_view> split_list(std::string_view list) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const std::string_view item = utf8::trim(list.substr(start, end - start));
    if (!item.empty()) items.push_back(item);
    start = end + 1;
  }
  return items;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; rethrows the first
// failure after all workers finish.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, n));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

MarkerLexicon load_lexicon(const PipelineConfig& config) {
  if (config.lexicon_path) {
    return MarkerLexicon::load(*config.lexicon_path, config.min_segment_tokens);
  }
  return MarkerLexicon::default_spanish(config.min_segment_tokens);
}

struct Selection {
  std::string text;
  std::string record;
};

struct DocumentResult {
  // Index parallel to config.systems.
  std::vector<std::vector<Selection>> selections;
  std::vector<std::string> candidate_records;
  std::vector<std::string> warnings;
  std::size_t over_cap = 0;
};

nlohmann::ordered_json base_record(const Document& doc, std::size_t index,
                                   Policy policy, const Sentence& sentence) {
  nlohmann::ordered_json record;
  record["doc"] = doc.id;
  record["sentence"] = index;
  record["policy"] = policy_name(policy);
  record["segments"] = sentence.segment_count();
  return record;
}

DocumentResult compress_document(const Document& doc, const NGramModel& model,
                                 const MarkerLexicon& lexicon,
                                 const PipelineConfig& config) {
  DocumentResult result;
  result.selections.resize(config.systems.size());
  const bool needs_candidates =
      std::any_of(config.systems.begin(), config.systems.end(), [](Policy p) {
        return p == Policy::kAll || p == Policy::kFirst;
      });

  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence sentence = segment(doc.sentences[s].tokens(), lexicon);
    const std::size_t k = sentence.segment_count();

    std::vector<ScoredCandidate> scored;
    bool over_cap = false;
    if (needs_candidates) {
      try {
        const auto candidates = enumerate_candidates(sentence, config.k_max, s);
        if (config.dump_candidates) {
          for (const auto& candidate : candidates) {
            result.candidate_records.push_back(
                candidate_record(doc.id, s, candidate, k));
          }
        }
        scored = score_candidates(candidates, model);
      } catch (const TooManySegments& e) {
        over_cap = true;
        ++result.over_cap;
        result.warnings.push_back(doc.id + " sentence " + std::to_string(s) +
                                  ": " + e.what() + "; passed through uncompressed");
        CompressionCandidate whole;
        whole.sentence_id = s;
        whole.tokens = sentence.tokens();
        scored.push_back(score_candidate(whole, model));
      }
    }

    for (std::size_t sys = 0; sys < config.systems.size(); ++sys) {
      const Policy policy = config.systems[sys];
      nlohmann::ordered_json record = base_record(doc, s, policy, sentence);
      std::vector<Token> chosen;
      double log_score = 0.0;
      if (policy == Policy::kAll || policy == Policy::kFirst) {
        if (over_cap) {
          chosen = sentence.tokens();
          log_score = scored.front().log_score;
          record["mask"] = std::string(k, '1');
          record["candidate"] = 0;
          record["warning"] = "segments exceed k_max; passed through uncompressed";
        } else {
          const ScoredCandidate& best =
              policy == Policy::kAll ? select_all(scored) : select_first(scored);
          chosen = best.candidate.tokens;
          log_score = best.log_score;
          record["mask"] = mask_to_string(best.candidate.mask, k);
          record["candidate"] = best.candidate.index;
        }
      } else if (policy == Policy::kRandom) {
        chosen = random_compress(sentence, config.random_rate,
                                 sentence_seed(config.seed, doc.id, s));
        log_score = model.sequence_logprob(normalized_words(chosen)) -
                    std::log(static_cast<double>(chosen.size()));
        record["mask"] = nullptr;
        record["candidate"] = nullptr;
      } else {
        chosen = sentence.tokens();
        log_score = model.sequence_logprob(normalized_words(chosen)) -
                    std::log(static_cast<double>(chosen.size()));
        record["mask"] = std::string(k, '1');
        record["candidate"] = 0;
      }
      Selection selection;
      selection.text = detokenize(chosen);
      record["text"] = selection.text;
      record["log_score"] = log_score;
      record["cr"] = compression_rate(sentence.size(), chosen.size());
      selection.record = record.dump();
      result.selections[sys].push_back(std::move(selection));
    }
  }
  return result;
}

}  // namespace

void PipelineConfig::validate() const {
  if (lm_order < 1 || lm_order > 10) throw ConfigError("order must be in [1, 10]");
  const std::size_t needed = static_cast<std::size_t>(lm_order - 1);
  if (lambdas.size() > 1 && lambdas.size() != needed) {
    throw ConfigError("--lambda needs 1 or " + std::to_string(needed) + " values");
  }
  for (double lambda : lambdas) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw ConfigError("lambda must be in [0, 1]");
  }
  if (min_segment_tokens == 0) throw ConfigError("min segment length must be >= 1");
  if (k_max == 0 || k_max > kMaxSupportedSegments) {
    throw ConfigError("kmax must be in [1, " + std::to_string(kMaxSupportedSegments) + "]");
  }
  if (systems.empty()) throw ConfigError("no systems selected");
  for (Policy policy : systems) {
    if (policy == Policy::kNone) throw ConfigError("system None is not selectable");
  }
  if (!(random_rate >= 0.0 && random_rate < 1.0)) throw ConfigError("rate must be in [0, 1)");
  if (jobs == 0) throw ConfigError("jobs must be >= 1");
}

std::vector<Policy> parse_systems(std::string_view list) {
  std::vector<Policy> systems;
  for (std::string_view item : split_list(list)) {
    const Policy policy = parse_policy(item);
    if (std::find(systems.begin(), systems.end(), policy) == systems.end()) {
      systems.push_back(policy);
    }
  }
  if (systems.empty()) throw ConfigError("empty system list");
  return systems;
}

std::vector<double> parse_lambdas(std::string_view list) {
  std::vector<double> lambdas;
  for (std::string_view item : split_list(list)) {
    double value = 0;
    const auto result = std::from_chars(item.data(), item.data() + item.size(), value);
    if (result.ec != std::errc() || result.ptr != item.data() + item.size()) {
      throw ConfigError("bad lambda '" + std::string(item) + "'");
    }
    lambdas.push_back(value);
  }
  return lambdas;
}

std::uint64_t sentence_seed(std::uint64_t seed, std::string_view document_id,
                            std::size_t sentence_index) {
  std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a
  for (unsigned char c : document_id) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return splitmix64(seed ^ splitmix64(h + sentence_index));
}

TrainSummary run_train(const fs::path& corpus_dir, const fs::path& model_path,
                       const PipelineConfig& config) {
  config.validate();
  const std::vector<Document> docs = load_corpus(corpus_dir);
  if (docs.empty()) throw DataError("no .txt documents in " + corpus_dir.string());

  std::vector<std::vector<std::string>> sentences;
  for (const Document& doc : docs) {
    for (const Sentence& sentence : doc.sentences) {
      sentences.push_back(normalized_words(sentence.tokens()));
    }
  }
  TrainOptions options;
  options.order = config.lm_order;
  options.lambdas = config.lambdas;
  const NGramModel model = NGramModel::train(sentences, options);
  model.save(model_path);

  TrainSummary summary;
  summary.documents = docs.size();
  summary.sentences = sentences.size();
  summary.tokens = model.token_count();
  summary.types = model.vocab_size();
  for (int m = 1; m <= model.order(); ++m) summary.ngram_types.push_back(model.ngram_types(m));
  return summary;
}

CompressSummary run_compress(const fs::path& input_dir, const fs::path& model_path,
                             const fs::path& output_dir, const PipelineConfig& config,
                             std::ostream* log) {
  config.validate();
  NGramModel model = NGramModel::load(model_path);
  if (!config.lambdas.empty()) model.set_lambdas(config.lambdas);
  const MarkerLexicon lexicon = load_lexicon(config);
  const std::vector<Document> docs = load_corpus(input_dir);
  if (docs.empty()) throw DataError("no .txt documents in " + input_dir.string());

  std::vector<DocumentResult> results(docs.size());
  parallel_for(docs.size(), config.jobs, [&](std::size_t i) {
    results[i] = compress_document(docs[i], model, lexicon, config);
  });

  CompressSummary summary;
  summary.documents = docs.size();
  fs::create_directories(output_dir);
  for (std::size_t sys = 0; sys < config.systems.size(); ++sys) {
    const std::string name(policy_name(config.systems[sys]));
    std::string records;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      std::vector<std::string> texts;
      for (const Selection& selection : results[d].selections[sys]) {
        texts.push_back(selection.text);
        records += selection.record;
        records.push_back('\n');
      }
      write_file(output_dir / name / (docs[d].id + ".txt"),
                 render_document(texts, docs[d].paragraph));
    }
    write_file(output_dir / (name + ".selections.jsonl"), records);
  }
  if (config.dump_candidates) {
    std::string dump;
    for (const DocumentResult& result : results) {
      for (const std::string& record : result.candidate_records) {
        dump += record;
        dump.push_back('\n');
      }
    }
    write_file(output_dir / "candidates.jsonl", dump);
  }
  for (std::size_t d = 0; d < docs.size(); ++d) {
    summary.sentences += docs[d].sentences.size();
    summary.over_cap += results[d].over_cap;
    if (log != nullptr) {
      for (const std::string& warning : results[d].warnings) {
        *log << "warning: " << warning << '\n';
      }
    }
  }
  return summary;
}

EvaluationReport run_evaluate(const fs::path& source_dir,
                              const std::vector<fs::path>& system_dirs,
                              const std::optional<fs::path>& reference_dir,
                              const fs::path& report_path) {
  SourceTexts sources;
  for (const fs::path& path : list_documents(source_dir)) {
    sources[document_id(path)] = read_words(path);
  }
  std::vector<SystemOutput> systems;
  for (const fs::path& dir : system_dirs) {
    SystemOutput system;
    system.name = dir.filename().empty() ? dir.parent_path().filename().string()
                                         : dir.filename().string();
    for (const fs::path& path : list_documents(dir)) {
      system.documents[document_id(path)] = read_words(path);
    }
    systems.push_back(std::move(system));
  }

  std::optional<ReferenceTexts> references;
  if (reference_dir) {
    std::vector<fs::path> annotators;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(*reference_dir, ec)) {
      if (entry.is_directory()) annotators.push_back(entry.path());
    }
    if (ec) throw DataError("cannot list " + reference_dir->string());
    std::sort(annotators.begin(), annotators.end());
    if (annotators.empty()) annotators.push_back(*reference_dir);
    references.emplace();
    for (const fs::path& dir : annotators) {
      for (const fs::path& path : list_documents(dir)) {
        (*references)[document_id(path)].push_back(read_words(path));
      }
    }
  }

  EvaluationReport report =
      build_report(systems, sources, references ? &*references : nullptr);
  write_file(report_path, format_table(report));
  write_file(report_path.string() + ".jsonl", format_jsonl(report));
  return report;
}

}  // namespace sentcomp
