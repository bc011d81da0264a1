#ifndef SENTCOMP_TESTS_ORACLES_H_
#define SENTCOMP_TESTS_ORACLES_H_

// Test-only reference implementations, written directly from the definitions
// and sharing no code with the library paths they check.

#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace sentcomp::oracle {

// Interpolated n-gram model evaluated by the textbook recursion over a plain
// map of string n-grams. Totals are found by scanning the whole map.
class ReferenceLm {
 public:
  ReferenceLm(const std::vector<std::vector<std::string>>& corpus, int order,
              std::vector<double> lambdas)
      : order_(order), lambdas_(std::move(lambdas)) {
    for (const auto& sentence : corpus) {
      if (sentence.empty()) continue;
      std::vector<std::string> padded(order - 1, "<s>");
      padded.insert(padded.end(), sentence.begin(), sentence.end());
      if (order >= 2) padded.push_back("</s>");
      for (std::size_t p = order - 1; p < padded.size(); ++p) {
        for (int m = 1; m <= order; ++m) {
          std::vector<std::string> gram(padded.begin() + (p + 1 - m), padded.begin() + p + 1);
          ++counts_[gram];
        }
        vocab_.insert(padded[p]);
        ++tokens_;
      }
    }
  }

  double unigram(const std::string& w) const {
    std::size_t c = 0;
    auto it = counts_.find({w});
    if (it != counts_.end()) c = it->second;
    return (c + 1.0) / (tokens_ + vocab_.size() + 1.0);
  }

  double prob(std::vector<std::string> context, const std::string& w) const {
    while (context.size() > static_cast<std::size_t>(order_ - 1)) context.erase(context.begin());
    if (context.empty()) return unigram(w);
    std::size_t total = 0;
    std::size_t joint = 0;
    for (const auto& [gram, count] : counts_) {
      if (gram.size() != context.size() + 1) continue;
      if (!std::equal(context.begin(), context.end(), gram.begin())) continue;
      total += count;
      if (gram.back() == w) joint += count;
    }
    std::vector<std::string> shorter(context.begin() + 1, context.end());
    const double lower = prob(shorter, w);
    if (total == 0) return lower;
    const double lambda = lambdas_[context.size() - 1];
    return lambda * static_cast<double>(joint) / static_cast<double>(total) +
           (1.0 - lambda) * lower;
  }

  // Linear-space probability of the padded sentence (a product, not logs).
  double sentence_prob(const std::vector<std::string>& words) const {
    std::vector<std::string> padded(order_ - 1, "<s>");
    padded.insert(padded.end(), words.begin(), words.end());
    if (order_ >= 2) padded.push_back("</s>");
    double p = 1.0;
    for (std::size_t i = order_ - 1; i < padded.size(); ++i) {
      std::vector<std::string> context(padded.begin() + (i - (order_ - 1)), padded.begin() + i);
      p *= prob(context, padded[i]);
    }
    return p;
  }

 private:
  int order_;
  std::vector<double> lambdas_;
  std::map<std::vector<std::string>, std::size_t> counts_;
  std::set<std::string> vocab_;
  std::size_t tokens_ = 0;
};

}  // namespace sentcomp::oracle

#endif  // SENTCOMP_TESTS_ORACLES_H_
