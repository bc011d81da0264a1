#ifndef SENTCOMP_METRICS_H_
#define SENTCOMP_METRICS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sentcomp {

using Words = std::vector<std::string>;

// Unit families shared by ROUGE and the FRESA-style divergence.
enum class GramFamily {
  kUnigram,  // F_1 / ROUGE-1
  kBigram,   // F_2 / ROUGE-2
  kSkip4,    // F_4 / ROUGE-SU4: unigrams plus skip-bigrams (i, j), j <= i + 4
};

inline constexpr std::size_t kMaxSkip = 4;

// Multiset of units; n-gram parts are joined with U+001F.
using UnitCounts = std::map<std::string, std::size_t>;

UnitCounts ngram_units(std::span<const std::string> words, std::size_t n);
UnitCounts su4_units(std::span<const std::string> words);
UnitCounts family_units(std::span<const std::string> words, GramFamily family);

// Recall of clipped n-gram matches, micro-averaged over references. Throws
// DataError when no reference has n tokens.
double rouge_n(std::span<const std::string> candidate,
               std::span<const Words> references, std::size_t n);
// Same over SU4 units. An empty candidate scores 0; throws DataError when no
// reference has a token.
double rouge_su4(std::span<const std::string> candidate,
                 std::span<const Words> references);

// 1 - JS(source || summary) in bits, over unit distributions add-one smoothed
// on the union support. Throws DataError when either text is empty.
double fresa(std::span<const std::string> summary,
             std::span<const std::string> source, GramFamily family);

struct FresaScores {
  double f1 = 0.0;
  double f2 = 0.0;
  double f4 = 0.0;
  double fm = 0.0;  // (f1 + f2 + f4) / 3
};

FresaScores fresa_scores(std::span<const std::string> summary,
                         std::span<const std::string> source);

inline constexpr const char* kFresaVariant =
    "FRESA-style: F_n = 1 - JS_2(source || summary), add-one smoothing on the "
    "union support; F_M = mean(F_1, F_2, F_4)";

}  // namespace sentcomp

#endif  // SENTCOMP_METRICS_H_
