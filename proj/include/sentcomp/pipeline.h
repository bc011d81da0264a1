#ifndef SENTCOMP_PIPELINE_H_
#define SENTCOMP_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "sentcomp/candidates.h"
#include "sentcomp/report.h"
#include "sentcomp/scorer.h"
#include "sentcomp/segmenter.h"

namespace sentcomp {

struct PipelineConfig {
  int lm_order = 3;
  // Empty: 0.5 per order when training, the stored weights when compressing.
  std::vector<double> lambdas;
  std::optional<std::filesystem::path> lexicon_path;
  std::size_t min_segment_tokens = MarkerLexicon::kDefaultMinSegmentTokens;
  std::size_t k_max = kDefaultMaxSegments;
  std::vector<Policy> systems = {Policy::kAll, Policy::kFirst, Policy::kRandom};
  double random_rate = kDefaultRandomRate;
  std::uint64_t seed = 42;
  std::optional<std::filesystem::path> reference_dir;
  std::size_t jobs = 1;
  bool dump_candidates = false;

  // Throws ConfigError naming the first out-of-range field.
  void validate() const;
};

std::vector<Policy> parse_systems(std::string_view list);
std::vector<double> parse_lambdas(std::string_view list);

// Seed of the Random system for one sentence; independent of scheduling.
std::uint64_t sentence_seed(std::uint64_t seed, std::string_view document_id,
                            std::size_t sentence_index);

struct TrainSummary {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::uint64_t tokens = 0;
  std::size_t types = 0;
  std::vector<std::size_t> ngram_types;  // index m-1
};

TrainSummary run_train(const std::filesystem::path& corpus_dir,
                       const std::filesystem::path& model_path,
                       const PipelineConfig& config);

struct CompressSummary {
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t over_cap = 0;  // sentences passed through for k > k_max
};

// Writes <output>/<System>/<doc>.txt and <output>/<System>.selections.jsonl
// per enabled system, plus <output>/candidates.jsonl when dump_candidates is
// set. Warnings go to `log` when given.
CompressSummary run_compress(const std::filesystem::path& input_dir,
                             const std::filesystem::path& model_path,
                             const std::filesystem::path& output_dir,
                             const PipelineConfig& config,
                             std::ostream* log = nullptr);

// Each system directory is named after its system. The reference directory
// holds one subdirectory per annotator, or the documents directly. Writes the
// table to `report_path` and the JSONL variant to `report_path` + ".jsonl".
EvaluationReport run_evaluate(
    const std::filesystem::path& source_dir,
    const std::vector<std::filesystem::path>& system_dirs,
    const std::optional<std::filesystem::path>& reference_dir,
    const std::filesystem::path& report_path);

}  // namespace sentcomp

#endif  // SENTCOMP_PIPELINE_H_
