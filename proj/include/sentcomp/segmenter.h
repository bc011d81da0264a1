#ifndef SENTCOMP_SEGMENTER_H_
#define SENTCOMP_SEGMENTER_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "sentcomp/text.h"

namespace sentcomp {

enum class MarkerPosition {
  kBefore,  // segment opens at the marker
  kAfter,   // segment opens right after the marker
};

struct Marker {
  std::vector<std::string> phrase;  // normalized tokens
  MarkerPosition position = MarkerPosition::kBefore;

  // Token offset, relative to the match start, where the boundary goes.
  // Leading punctuation of a kBefore phrase is context, not segment content.
  std::size_t boundary_offset() const;
};

class MarkerLexicon {
 public:
  static constexpr std::size_t kDefaultMinSegmentTokens = 3;

  // Throws ConfigError on an empty or non-normalized phrase, or when
  // min_segment_tokens is zero.
  MarkerLexicon(std::vector<Marker> markers,
                std::size_t min_segment_tokens = kDefaultMinSegmentTokens);

  // `phrase<TAB>before|after` lines; `#` starts a comment line.
  static MarkerLexicon parse(std::istream& in, const std::string& source,
                             std::size_t min_segment_tokens =
                                 kDefaultMinSegmentTokens);
  static MarkerLexicon load(const std::filesystem::path& path,
                            std::size_t min_segment_tokens =
                                kDefaultMinSegmentTokens);
  // The shipped Spanish lexicon (data/markers_es.tsv).
  static MarkerLexicon default_spanish(
      std::size_t min_segment_tokens = kDefaultMinSegmentTokens);

  const std::vector<Marker>& markers() const { return markers_; }
  std::size_t min_segment_tokens() const { return min_segment_tokens_; }

  // Longest marker whose phrase matches `words` starting at `at`, or null.
  const Marker* longest_match(std::span<const std::string> words,
                              std::size_t at) const;

 private:
  std::vector<Marker> markers_;
  std::size_t min_segment_tokens_;
};

// Splits a sentence into elementary discourse units. Boundaries proposed by
// lexicon markers are accepted left to right; one that would leave a segment
// (on either side) shorter than min_segment_tokens is dropped. With no
// accepted boundary the sentence is a single unit. Throws DataError on an
// empty token list.
Sentence segment(std::span<const Token> tokens, const MarkerLexicon& lexicon);

}  // namespace sentcomp

#endif  // SENTCOMP_SEGMENTER_H_
