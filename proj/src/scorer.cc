#include "sentcomp/scorer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sentcomp/errors.h"
#include "sentcomp/utf8.h"

namespace sentcomp {

namespace {

void check_rate(double rate) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw ConfigError("random deletion rate must be in [0, 1)");
  }
}

// Uniform draw in [0, bound) by rejection on the raw engine output, so the
// sequence is identical across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = 0;
  do {
    draw = engine();
  } while (draw >= limit);
  return draw % bound;
}

bool better(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.log_score != b.log_score) return a.log_score > b.log_score;
  if (a.n_tokens != b.n_tokens) return a.n_tokens > b.n_tokens;
  return a.candidate.index < b.candidate.index;
}

}  // namespace

std::string_view policy_name(Policy policy) {
  switch (policy) {
    case Policy::kAll:
      return "All";
    case Policy::kFirst:
      return "First";
    case Policy::kRandom:
      return "Random";
    case Policy::kNone:
      return "None";
  }
  return "None";
}

Policy parse_policy(std::string_view name) {
  const std::string lowered = utf8::to_lower(utf8::trim(name));
  if (lowered == "all") return Policy::kAll;
  if (lowered == "first") return Policy::kFirst;
  if (lowered == "random") return Policy::kRandom;
  if (lowered == "none") return Policy::kNone;
  throw ConfigError("unknown system '" + std::string(name) + "'");
}

SystemChoice SystemChoice::random(double rate, std::uint64_t seed) {
  check_rate(rate);
  return SystemChoice(Policy::kRandom, rate, seed);
}

ScoredCandidate score_candidate(const CompressionCandidate& candidate,
                                const NGramModel& model) {
  if (candidate.tokens.empty()) throw DataError("empty compression candidate");
  ScoredCandidate scored;
  scored.candidate = candidate;
  scored.n_tokens = candidate.tokens.size();
  scored.log_prob = model.sequence_logprob(normalized_words(candidate.tokens));
  scored.log_score = scored.log_prob - std::log(static_cast<double>(scored.n_tokens));
  return scored;
}

std::vector<ScoredCandidate> score_candidates(
    std::span<const CompressionCandidate> candidates, const NGramModel& model) {
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    scored.push_back(score_candidate(candidate, model));
  }
  return scored;
}

const ScoredCandidate& select_all(std::span<const ScoredCandidate> scored) {
  if (scored.empty()) throw DataError("no candidates to select from");
  const ScoredCandidate* best = &scored.front();
  for (const auto& candidate : scored) {
    if (better(candidate, *best)) best = &candidate;
  }
  return *best;
}

const ScoredCandidate& select_first(std::span<const ScoredCandidate> scored) {
  if (scored.empty()) throw DataError("no candidates to select from");
  const ScoredCandidate* best = nullptr;
  for (const auto& candidate : scored) {
    if (!candidate.candidate.keeps_segment(0)) continue;
    if (best == nullptr || better(candidate, *best)) best = &candidate;
  }
  if (best == nullptr) throw DataError("no candidate keeps the first segment");
  return *best;
}

std::vector<Token> random_compress(const Sentence& sentence, double rate,
                                   std::uint64_t seed) {
  check_rate(rate);
  const auto& tokens = sentence.tokens();
  std::vector<std::size_t> words;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_punct) words.push_back(i);
  }
  auto deletions = static_cast<std::size_t>(
      std::llround(rate * static_cast<double>(tokens.size())));
  deletions = std::min({deletions, words.size(), tokens.size() - 1});

  // Partial Fisher-Yates: the first `deletions` slots become the sample.
  std::mt19937_64 engine(seed);
  for (std::size_t i = 0; i < deletions; ++i) {
    const std::size_t j = i + uniform_below(engine, words.size() - i);
    std::swap(words[i], words[j]);
  }
  std::vector<bool> removed(tokens.size(), false);
  for (std::size_t i = 0; i < deletions; ++i) removed[words[i]] = true;

  std::vector<Token> kept;
  kept.reserve(tokens.size() - deletions);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!removed[i]) kept.push_back(tokens[i]);
  }
  return kept;
}

double compression_rate(std::size_t original_tokens,
                        std::size_t compressed_tokens) {
  if (compressed_tokens == 0) throw DataError("compression removed every token");
  if (compressed_tokens > original_tokens) {
    throw DataError("compressed text (" + std::to_string(compressed_tokens) +
                    " tokens) is longer than the original (" +
                    std::to_string(original_tokens) + ")");
  }
  return 1.0 - static_cast<double>(compressed_tokens) /
                   static_cast<double>(original_tokens);
}

}  // namespace sentcomp
