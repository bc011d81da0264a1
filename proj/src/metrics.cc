#include "sentcomp/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "sentcomp/errors.h"

namespace sentcomp {

namespace {

constexpr char kJoin = '\x1f';

std::string join_pair(const std::string& a, const std::string& b) {
  std::string unit = a;
  unit.push_back(kJoin);
  unit += b;
  return unit;
}

// Clipped recall over pre-counted units.
double clipped_recall(const UnitCounts& candidate,
                      std::span<const UnitCounts> references) {
  std::size_t matched = 0;
  std::size_t total = 0;
  for (const UnitCounts& reference : references) {
    for (const auto& [unit, count] : reference) {
      total += count;
      auto it = candidate.find(unit);
      if (it != candidate.end()) matched += std::min(count, it->second);
    }
  }
  return static_cast<double>(matched) / static_cast<double>(total);
}

double kl_to_mixture(const std::vector<double>& p, const std::vector<double>& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    sum += p[i] * std::log2(p[i] / m);
  }
  return sum;
}

}  // namespace

UnitCounts ngram_units(std::span<const std::string> words, std::size_t n) {
  UnitCounts units;
  if (n == 0 || words.size() < n) return units;
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    std::string unit = words[i];
    for (std::size_t j = 1; j < n; ++j) {
      unit.push_back(kJoin);
      unit += words[i + j];
    }
    ++units[unit];
  }
  return units;
}

UnitCounts su4_units(std::span<const std::string> words) {
  UnitCounts units = ngram_units(words, 1);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size() && j <= i + kMaxSkip; ++j) {
      ++units[join_pair(words[i], words[j])];
    }
  }
  return units;
}

UnitCounts family_units(std::span<const std::string> words, GramFamily family) {
  switch (family) {
    case GramFamily::kUnigram:
      return ngram_units(words, 1);
    case GramFamily::kBigram:
      return ngram_units(words, 2);
    case GramFamily::kSkip4:
      return su4_units(words);
  }
  return {};
}

double rouge_n(std::span<const std::string> candidate,
               std::span<const Words> references, std::size_t n) {
  if (n == 0) throw DataError("ROUGE-N needs n >= 1");
  std::vector<UnitCounts> reference_units;
  bool defined = false;
  for (const Words& reference : references) {
    reference_units.push_back(ngram_units(reference, n));
    defined = defined || reference.size() >= n;
  }
  if (!defined) {
    throw DataError("ROUGE-" + std::to_string(n) +
                    " is undefined: every reference is shorter than n");
  }
  return clipped_recall(ngram_units(candidate, n), reference_units);
}

double rouge_su4(std::span<const std::string> candidate,
                 std::span<const Words> references) {
  std::vector<UnitCounts> reference_units;
  bool defined = false;
  for (const Words& reference : references) {
    reference_units.push_back(su4_units(reference));
    defined = defined || !reference.empty();
  }
  if (!defined) throw DataError("ROUGE-SU4 is undefined: every reference is empty");
  if (candidate.empty()) return 0.0;
  return clipped_recall(su4_units(candidate), reference_units);
}

double fresa(std::span<const std::string> summary,
             std::span<const std::string> source, GramFamily family) {
  if (summary.empty()) throw DataError("FRESA: empty summary");
  if (source.empty()) throw DataError("FRESA: empty source");
  const UnitCounts a = family_units(source, family);
  const UnitCounts b = family_units(summary, family);

  std::set<std::string> support;
  for (const auto& [unit, count] : a) support.insert(unit);
  for (const auto& [unit, count] : b) support.insert(unit);
  // Both texts too short to have a single unit of this family.
  if (support.empty()) return 1.0;

  std::size_t total_a = support.size();
  std::size_t total_b = support.size();
  for (const auto& [unit, count] : a) total_a += count;
  for (const auto& [unit, count] : b) total_b += count;

  std::vector<double> p;
  std::vector<double> q;
  p.reserve(support.size());
  q.reserve(support.size());
  for (const std::string& unit : support) {
    auto ia = a.find(unit);
    auto ib = b.find(unit);
    p.push_back(static_cast<double>((ia == a.end() ? 0 : ia->second) + 1) /
                static_cast<double>(total_a));
    q.push_back(static_cast<double>((ib == b.end() ? 0 : ib->second) + 1) /
                static_cast<double>(total_b));
  }
  const double js = 0.5 * kl_to_mixture(p, q) + 0.5 * kl_to_mixture(q, p);
  return 1.0 - std::clamp(js, 0.0, 1.0);
}

FresaScores fresa_scores(std::span<const std::string> summary,
                         std::span<const std::string> source) {
  FresaScores scores;
  scores.f1 = fresa(summary, source, GramFamily::kUnigram);
  scores.f2 = fresa(summary, source, GramFamily::kBigram);
  scores.f4 = fresa(summary, source, GramFamily::kSkip4);
  scores.fm = (scores.f1 + scores.f2 + scores.f4) / 3.0;
  return scores;
}

}  // namespace sentcomp
