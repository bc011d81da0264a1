#ifndef SENTCOMP_NGRAM_MODEL_H_
#define SENTCOMP_NGRAM_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sentcomp {

struct TrainOptions {
  int order = 3;
  // Interpolation weights for orders 2..N. Empty means 0.5 everywhere; a
  // single value is used for every order.
  std::vector<double> lambdas;
  // Carve out add-one probability mass for <unk> on the unigram level. With
  // this off the vocabulary is closed and unseen words have probability 0.
  bool reserve_unk = true;
};

// Order-N count model with Jelinek-Mercer interpolation:
//
//   P(w | c) = l_m * Pml(w | c) + (1 - l_m) * P(w | c'),
//
// where c' drops the oldest word of c, bottoming out in an add-one smoothed
// unigram that also carries the <unk> mass. One weight l_m per order;
// contexts never seen in training get weight 0 and defer wholly to the lower
// order, so every conditional distribution stays normalized.
//
// Sentences are padded with N-1 <s> and, for N >= 2, one </s>. A unigram
// model is a plain bag of words and has no end event.
class NGramModel {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kUnk = "<unk>";

  // Sentences are sequences of normalized words. Throws ConfigError for a bad
  // order or weights and DataError for an empty corpus.
  static NGramModel train(std::span<const std::vector<std::string>> sentences,
                          const TrainOptions& options);

  int order() const { return order_; }
  bool reserves_unk() const { return reserve_unk_; }

  // Weight of order m (2 <= m <= N).
  double lambda(int m) const;
  const std::vector<double>& lambdas() const { return lambdas_; }
  void set_lambdas(std::vector<double> lambdas);

  // Raw count of an m-gram given as words (sentinels by name).
  std::uint64_t count(std::span<const std::string> ngram) const;
  // Sum of continuation counts of a context; the empty context gives the
  // total number of unigram events.
  std::uint64_t context_total(std::span<const std::string> context) const;

  double mle_prob(std::span<const std::string> context,
                  std::string_view word) const;
  double unigram_prob(std::string_view word) const;
  // Contexts longer than N-1 are truncated to their most recent N-1 words.
  double interp_prob(std::span<const std::string> context,
                     std::string_view word) const;
  // Natural-log probability of the padded sentence. Throws DataError on an
  // empty sequence or a zero-probability event.
  double sequence_logprob(std::span<const std::string> words) const;

  double unk_mass() const;

  // Observed word types, sentinels excluded.
  std::size_t vocab_size() const;
  // Every outcome a conditional distribution can assign mass to: observed
  // words, </s> when the model has it, and <unk> when reserved.
  std::vector<std::string> outcomes() const;
  // Distinct contexts (m-1 words) seen before some word at order m.
  std::vector<std::vector<std::string>> observed_contexts(int m) const;
  std::size_t ngram_types(int m) const;
  std::uint64_t token_count() const { return total_; }

  // Header `sentcomp-ngram<TAB>order=N<TAB>vocab=V<TAB>lambdas=a,b<TAB>unk=1`
  // followed by `m<TAB>w1 w2 ...<TAB>count` lines in sorted order.
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  // Throws ParseError (with line number) on malformed input.
  static NGramModel load(std::istream& in, const std::string& source);
  static NGramModel load(const std::filesystem::path& path);

 private:
  using WordId = std::uint32_t;
  using Key = std::vector<WordId>;

  static constexpr WordId kUnkId = 0;
  static constexpr WordId kBosId = 1;
  static constexpr WordId kEosId = 2;

  NGramModel(int order, std::vector<double> lambdas, bool reserve_unk);

  WordId intern(std::string_view word);
  WordId lookup(std::string_view word) const;
  Key to_key(std::span<const std::string> words) const;
  void add(const Key& ngram, std::uint64_t count);
  double interp_ids(const WordId* context, std::size_t context_len,
                    WordId word) const;
  double unigram_id(WordId word) const;

  int order_;
  std::vector<double> lambdas_;
  bool reserve_unk_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> ids_;
  // Index m-1 holds the m-gram counts and the context totals for order m.
  std::vector<std::map<Key, std::uint64_t>> counts_;
  std::vector<std::map<Key, std::uint64_t>> totals_;
  std::uint64_t total_ = 0;
};

}  // namespace sentcomp

#endif  // SENTCOMP_NGRAM_MODEL_H_
