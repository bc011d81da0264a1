#ifndef SENTCOMP_SCORER_H_
#define SENTCOMP_SCORER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentcomp/candidates.h"
#include "sentcomp/ngram_model.h"
#include "sentcomp/text.h"

namespace sentcomp {

struct ScoredCandidate {
  CompressionCandidate candidate;
  std::size_t n_tokens = 0;
  double log_prob = 0.0;
  // log(P / n) = log_prob - log(n_tokens).
  double log_score = 0.0;
};

enum class Policy { kAll, kFirst, kRandom, kNone };

std::string_view policy_name(Policy policy);
// Case-insensitive "all" / "first" / "random" / "none"; throws ConfigError.
Policy parse_policy(std::string_view name);

inline constexpr double kDefaultRandomRate = 0.2297;

class SystemChoice {
 public:
  static SystemChoice all() { return SystemChoice(Policy::kAll, {}, {}); }
  static SystemChoice first() { return SystemChoice(Policy::kFirst, {}, {}); }
  static SystemChoice none() { return SystemChoice(Policy::kNone, {}, {}); }
  // Throws ConfigError unless 0 <= rate < 1.
  static SystemChoice random(double rate, std::uint64_t seed);

  Policy policy() const { return policy_; }
  const std::optional<double>& random_rate() const { return random_rate_; }
  const std::optional<std::uint64_t>& seed() const { return seed_; }

 private:
  SystemChoice(Policy policy, std::optional<double> rate,
               std::optional<std::uint64_t> seed)
      : policy_(policy), random_rate_(rate), seed_(seed) {}

  Policy policy_;
  std::optional<double> random_rate_;
  std::optional<std::uint64_t> seed_;
};

// Throws DataError on an empty candidate.
ScoredCandidate score_candidate(const CompressionCandidate& candidate,
                                const NGramModel& model);
std::vector<ScoredCandidate> score_candidates(
    std::span<const CompressionCandidate> candidates, const NGramModel& model);

// Highest log_score; ties go to the longer candidate, then the lower index.
// Throws DataError on an empty list.
const ScoredCandidate& select_all(std::span<const ScoredCandidate> scored);
// select_all restricted to candidates that keep segment 1.
const ScoredCandidate& select_first(std::span<const ScoredCandidate> scored);

// Deletes round(rate * n) non-punctuation tokens (n counts every token),
// chosen uniformly without replacement. At least one token always survives.
// Deterministic for a given seed. Throws ConfigError unless 0 <= rate < 1.
std::vector<Token> random_compress(const Sentence& sentence, double rate,
                                   std::uint64_t seed);

// 1 - compressed / original. Throws DataError unless
// 0 < compressed <= original.
double compression_rate(std::size_t original_tokens,
                        std::size_t compressed_tokens);

}  // namespace sentcomp

#endif  // SENTCOMP_SCORER_H_
