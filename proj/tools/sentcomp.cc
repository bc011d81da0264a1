// Command-line driver: train an n-gram model, compress a corpus with the
// All / First / Random systems, and evaluate system outputs.

#include <cctype>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentcomp/errors.h"
#include "sentcomp/pipeline.h"
#include "sentcomp/report.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string env_name(const std::string& flag) {
  std::string name = "SENTCOMP_";
  for (char c : flag) name.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
  return name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentence compression by discourse segmentation and n-gram LMs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");

  sentcomp::PipelineConfig config;
  std::string lambdas;
  std::string systems = "all,first,random";
  std::string lexicon;
  std::string refs;

  auto flag = [&](const std::string& name, auto& target, const std::string& help) {
    return app.add_option("--" + name, target, help)->envname(env_name(name));
  };
  flag("order", config.lm_order, "n-gram order")->capture_default_str();
  flag("lambda", lambdas, "interpolation weight(s) for orders 2..N, comma separated");
  flag("lexicon", lexicon, "discourse-marker lexicon file");
  flag("min-segment", config.min_segment_tokens, "minimum segment length in tokens")
      ->capture_default_str();
  flag("kmax", config.k_max, "maximum segments per sentence")->capture_default_str();
  flag("systems", systems, "systems to run: all, first, random")->capture_default_str();
  flag("rate", config.random_rate, "Random system deletion rate")->capture_default_str();
  flag("seed", config.seed, "Random system seed")->capture_default_str();
  flag("refs", refs, "reference summaries directory");
  flag("jobs", config.jobs, "worker threads")->capture_default_str();
  app.add_flag("--dump-candidates", config.dump_candidates,
               "write every compression candidate to candidates.jsonl")
      ->envname(env_name("dump-candidates"));

  std::string corpus_dir, model_path, input_dir, output_dir, source_dir, report_path;
  std::vector<std::string> system_dirs;

  CLI::App* train = app.add_subcommand("train", "count n-grams and write a model");
  train->add_option("corpus", corpus_dir, "directory of .txt documents")->required();
  train->add_option("model", model_path, "model file to write")->required();

  CLI::App* compress = app.add_subcommand("compress", "compress a corpus");
  compress->add_option("input", input_dir, "directory of .txt documents")->required();
  compress->add_option("model", model_path, "trained model file")->required();
  compress->add_option("output", output_dir, "output directory")->required();

  CLI::App* evaluate = app.add_subcommand("evaluate", "score system outputs");
  evaluate->add_option("source", source_dir, "original documents")->required();
  evaluate->add_option("systems", system_dirs, "one directory per system")->required();
  evaluate->add_option("-o,--report", report_path, "report file (table; .jsonl beside it)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!lambdas.empty()) config.lambdas = sentcomp::parse_lambdas(lambdas);
    config.systems = sentcomp::parse_systems(systems);
    if (!lexicon.empty()) config.lexicon_path = lexicon;
    if (!refs.empty()) config.reference_dir = refs;
    config.validate();

    if (*train) {
      const auto summary = sentcomp::run_train(corpus_dir, model_path, config);
      std::cout << "documents\t" << summary.documents << "\n"
                << "sentences\t" << summary.sentences << "\n"
                << "tokens\t" << summary.tokens << "\n"
                << "types\t" << summary.types << "\n";
      for (std::size_t m = 0; m < summary.ngram_types.size(); ++m) {
        std::cout << (m + 1) << "-grams\t" << summary.ngram_types[m] << "\n";
      }
    } else if (*compress) {
      const auto summary =
          sentcomp::run_compress(input_dir, model_path, output_dir, config, &std::cerr);
      std::cout << "documents\t" << summary.documents << "\n"
                << "sentences\t" << summary.sentences << "\n"
                << "over_kmax\t" << summary.over_cap << "\n";
    } else if (*evaluate) {
      std::vector<fs::path> dirs(system_dirs.begin(), system_dirs.end());
      const auto report =
          sentcomp::run_evaluate(source_dir, dirs, config.reference_dir, report_path);
      std::cout << sentcomp::format_table(report);
    }
  } catch (const sentcomp::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
