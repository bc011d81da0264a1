#include "sentcomp/scorer.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "sentcomp/corpus_io.h"
#include "sentcomp/errors.h"
#include "sentcomp/segmenter.h"

namespace sentcomp {
namespace {

const std::string kExample1 =
    "Además ella participó ese mismo año en el concierto en tributo a Freddie "
    "Mercury, hablando acerca de la prevención necesaria para combatir el SIDA.";

std::vector<std::vector<std::string>> fixture_sentences() {
  std::vector<std::vector<std::string>> out;
  for (const Document& doc : load_corpus(std::string(SENTCOMP_DATA_DIR) + "/corpus_es")) {
    for (const Sentence& s : doc.sentences) out.push_back(normalized_words(s.tokens()));
  }
  return out;
}

ScoredCandidate fake(std::size_t index, SegmentMask mask, std::size_t n, double log_score) {
  ScoredCandidate s;
  s.candidate.index = index;
  s.candidate.mask = mask;
  s.n_tokens = n;
  s.log_prob = log_score + std::log(static_cast<double>(n));
  s.log_score = log_score;
  return s;
}

CompressionCandidate candidate_of(const std::string& text) {
  CompressionCandidate c;
  c.tokens = tokenize(text);
  c.mask = 1;
  return c;
}

TEST(ScoreCandidateTest, CertainSingleTokenScoresOne) {
  TrainOptions options;
  options.order = 1;
  options.reserve_unk = false;
  const auto model = NGramModel::train(std::vector<std::vector<std::string>>{{"a"}}, options);
  const ScoredCandidate s = score_candidate(candidate_of("a"), model);
  EXPECT_EQ(s.n_tokens, 1u);
  EXPECT_EQ(s.log_score, 0.0);
  EXPECT_EQ(std::exp(s.log_score), 1.0);
}

TEST(ScoreCandidateTest, LengthDenominator) {
  TrainOptions options;
  options.order = 1;
  options.reserve_unk = false;
  const auto model = NGramModel::train(std::vector<std::vector<std::string>>{{"a"}}, options);
  const ScoredCandidate two = score_candidate(candidate_of("a a"), model);
  const ScoredCandidate four = score_candidate(candidate_of("a a a a"), model);
  EXPECT_EQ(two.log_prob, four.log_prob);
  EXPECT_NEAR(two.log_score - four.log_score, std::log(2.0), 1e-15);
}

TEST(ScoreCandidateTest, ExampleOneTailAgainstReferenceProduct) {
  const auto corpus = fixture_sentences();
  TrainOptions options;
  options.order = 3;
  options.lambdas = {0.5, 0.5};
  const auto model = NGramModel::train(corpus, options);
  const oracle::ReferenceLm reference(corpus, 3, {0.5, 0.5});

  const Sentence s = segment(tokenize(kExample1), MarkerLexicon::default_spanish());
  const auto candidates = enumerate_candidates(s);
  const ScoredCandidate cc3 = score_candidate(candidates[3], model);
  const std::vector<std::string> words = {"para", "combatir", "el", "sida", "."};
  ASSERT_EQ(normalized_words(candidates[3].tokens), words);
  const double expected = std::log(reference.sentence_prob(words) / 5.0);
  EXPECT_NEAR(cc3.log_score, expected, 1e-10);
}

TEST(ScoreCandidateTest, EmptyCandidateIsAnError) {
  const auto model = NGramModel::train(std::vector<std::vector<std::string>>{{"a"}}, {});
  EXPECT_THROW(score_candidate(CompressionCandidate{}, model), DataError);
}

TEST(SelectAllTest, Singleton) {
  const std::vector<ScoredCandidate> one = {fake(0, 1, 3, -2.0)};
  EXPECT_EQ(&select_all(one), &one[0]);
}

TEST(SelectAllTest, StrictArgmax) {
  const std::vector<ScoredCandidate> scored = {fake(0, 7, 10, -5.0), fake(6, 1, 4, -3.0)};
  EXPECT_EQ(select_all(scored).candidate.index, 6u);
}

TEST(SelectAllTest, TiesPreferLongerThenLowerIndex) {
  const std::vector<ScoredCandidate> by_length = {fake(1, 6, 3, -1.0), fake(2, 5, 5, -1.0)};
  EXPECT_EQ(select_all(by_length).candidate.index, 2u);
  const std::vector<ScoredCandidate> by_index = {fake(4, 3, 5, -1.0), fake(2, 5, 5, -1.0)};
  EXPECT_EQ(select_all(by_index).candidate.index, 2u);
}

TEST(SelectAllTest, EmptyIsAnError) {
  EXPECT_THROW(select_all({}), DataError);
  EXPECT_THROW(select_first({}), DataError);
}

TEST(SelectAllTest, ExhaustiveKThree) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> score(-10.0, 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ScoredCandidate> scored;
    for (std::size_t i = 0; i < 7; ++i) scored.push_back(fake(i, 7 - i, 1 + rng() % 9, score(rng)));
    std::size_t best = 0;
    for (std::size_t i = 1; i < 7; ++i) {
      if (scored[i].log_score > scored[best].log_score) best = i;
    }
    EXPECT_EQ(select_all(scored).candidate.index, best);
  }
}

TEST(SelectFirstTest, FeasibleSetForKThree) {
  const Sentence s = segment(tokenize(kExample1), MarkerLexicon::default_spanish());
  std::vector<std::size_t> feasible;
  for (const auto& c : enumerate_candidates(s)) {
    if (c.keeps_segment(0)) feasible.push_back(c.index);
  }
  EXPECT_EQ(feasible, (std::vector<std::size_t>{0, 2, 4, 6}));
}

TEST(SelectFirstTest, SingleSegmentReturnsOriginal) {
  const auto model = NGramModel::train(fixture_sentences(), {});
  const Sentence s = Sentence::whole(tokenize("La cantante nació en Valencia."));
  const auto scored = score_candidates(enumerate_candidates(s), model);
  EXPECT_EQ(select_first(scored).candidate.tokens, s.tokens());
}

TEST(SelectFirstTest, DiffersFromSelectAllWhenBestDropsSegmentOne) {
  // The model has seen the second segment many times and the first never.
  std::vector<std::vector<std::string>> corpus(20, {"el", "gato", "duerme", "."});
  corpus.push_back({"otra", "cosa"});
  const auto model = NGramModel::train(corpus, {});
  const Sentence s(tokenize("zz yy xx el gato duerme ."), {{0, 3}, {3, 7}});
  const auto scored = score_candidates(enumerate_candidates(s), model);

  std::size_t brute_all = 0;
  std::size_t brute_first = 0;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    if (scored[i].log_score > scored[brute_all].log_score) brute_all = i;
    if (scored[i].candidate.keeps_segment(0) &&
        scored[i].log_score > scored[brute_first].log_score) {
      brute_first = i;
    }
  }
  EXPECT_EQ(select_all(scored).candidate.index, brute_all);
  EXPECT_EQ(select_first(scored).candidate.index, brute_first);
  EXPECT_EQ(brute_all, 1u);  // "el gato duerme ."
  EXPECT_NE(select_all(scored).candidate.index, select_first(scored).candidate.index);
}

TEST(SelectionPropertyTest, ShiftInvarianceAndFirstBound) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> score(-30.0, 0.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + rng() % 6;
    const std::size_t count = (std::size_t{1} << k) - 1;
    std::vector<ScoredCandidate> scored;
    for (std::size_t i = 0; i < count; ++i) {
      scored.push_back(fake(i, static_cast<SegmentMask>(count - i), 1 + rng() % 20, score(rng)));
    }
    const auto& all = select_all(scored);
    const auto& first = select_first(scored);
    EXPECT_TRUE(first.candidate.keeps_segment(0));
    EXPECT_GE(all.log_score, first.log_score);

    // A common factor on every probability adds the same log offset.
    const double shift = score(rng);
    auto shifted = scored;
    for (auto& s : shifted) {
      s.log_prob += shift;
      s.log_score = s.log_prob - std::log(static_cast<double>(s.n_tokens));
    }
    const auto& all_shifted = select_all(shifted);
    const auto& first_shifted = select_first(shifted);
    // Ties can only move if rounding flips a near tie; the scores are random.
    EXPECT_EQ(all_shifted.candidate.index, all.candidate.index);
    EXPECT_EQ(first_shifted.candidate.index, first.candidate.index);
  }
}

Sentence words_sentence(std::size_t n, bool with_period = false) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(Token::make("w" + std::to_string(i)));
  if (with_period) tokens.push_back(Token::make("."));
  return Sentence::whole(std::move(tokens));
}

TEST(RandomCompressTest, ZeroRateKeepsSentence) {
  const Sentence s = words_sentence(10, true);
  EXPECT_EQ(random_compress(s, 0.0, 1), s.tokens());
}

TEST(RandomCompressTest, NearOneRateLeavesOneToken) {
  const Sentence s = words_sentence(10);
  // round(0.9 * 10) = 9 = n - 1.
  EXPECT_EQ(random_compress(s, 0.9, 5).size(), 1u);
  // round(0.97 * 10) = 10 would empty the sentence; one token always stays.
  EXPECT_EQ(random_compress(s, 0.97, 5).size(), 1u);
}

TEST(RandomCompressTest, TableOneRateOnTenWords) {
  const Sentence s = words_sentence(10);
  EXPECT_EQ(random_compress(s, 0.2297, 99).size(), 8u);
}

TEST(RandomCompressTest, DeterministicOrderedAndSparesPunctuation) {
  const Sentence s(tokenize("uno , dos tres ; cuatro cinco seis siete ocho ."), {{0, 11}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_compress(s, 0.5, seed);
    EXPECT_EQ(a, random_compress(s, 0.5, seed));
    EXPECT_EQ(a.size(), 11u - 6u);  // round(5.5) = 6 deletions
    std::size_t at = 0;
    for (const Token& t : a) {
      while (at < s.size() && !(s.tokens()[at] == t)) ++at;
      ASSERT_LT(at, s.size());
      ++at;
    }
    std::size_t punct = 0;
    for (const Token& t : a) punct += t.is_punct;
    EXPECT_EQ(punct, 3u);
  }
}

TEST(RandomCompressTest, DeletionCountIsCappedByWords) {
  const Sentence s(tokenize("a , ; : . !"), {{0, 6}});
  // round(0.8 * 6) = 5 but only one word can go.
  EXPECT_EQ(random_compress(s, 0.8, 3).size(), 5u);
}

TEST(RandomCompressTest, RateOutOfRange) {
  const Sentence s = words_sentence(4);
  EXPECT_THROW(random_compress(s, 1.0, 0), ConfigError);
  EXPECT_THROW(random_compress(s, -0.1, 0), ConfigError);
  EXPECT_THROW(SystemChoice::random(1.2, 0), ConfigError);
}

TEST(RandomCompressTest, MeanRateConverges) {
  std::mt19937 rng(31);
  double total = 0.0;
  const int sentences = 2000;
  for (int i = 0; i < sentences; ++i) {
    const Sentence s = words_sentence(8 + rng() % 30, true);
    total += compression_rate(s.size(), random_compress(s, 0.2297, rng()).size());
  }
  EXPECT_NEAR(total / sentences, 0.2297, 0.01);
}

TEST(CompressionRateTest, Definitional) {
  EXPECT_EQ(compression_rate(100, 100), 0.0);
  EXPECT_NEAR(compression_rate(100, 70), 0.30, 1e-15);
  EXPECT_THROW(compression_rate(100, 101), DataError);
  EXPECT_THROW(compression_rate(100, 0), DataError);
}

TEST(SystemChoiceTest, RateOnlyForRandom) {
  EXPECT_FALSE(SystemChoice::all().random_rate().has_value());
  EXPECT_FALSE(SystemChoice::first().seed().has_value());
  const auto random = SystemChoice::random(0.2297, 42);
  EXPECT_EQ(random.policy(), Policy::kRandom);
  EXPECT_EQ(*random.random_rate(), 0.2297);
  EXPECT_EQ(*random.seed(), 42u);
}

TEST(PolicyTest, NamesRoundTrip) {
  for (Policy p : {Policy::kAll, Policy::kFirst, Policy::kRandom, Policy::kNone}) {
    EXPECT_EQ(parse_policy(policy_name(p)), p);
  }
  EXPECT_EQ(parse_policy(" FIRST "), Policy::kFirst);
  EXPECT_THROW(parse_policy("best"), ConfigError);
}

}  // namespace
}  // namespace sentcomp
