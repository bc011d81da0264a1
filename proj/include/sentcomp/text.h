#ifndef SENTCOMP_TEXT_H_
#define SENTCOMP_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sentcomp {

struct Token {
  std::string surface;
  // Lowercased, whitespace-trimmed surface; the form seen by the LM and the
  // metrics.
  std::string normalized;
  bool is_punct = false;

  // Throws DataError on an empty (or whitespace-only) surface.
  static Token make(std::string_view surface);

  bool operator==(const Token&) const = default;
};

// Half-open token range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

// A tokenized sentence together with its discourse segments. The segment
// spans always partition [0, n) into contiguous non-empty pieces.
class Sentence {
 public:
  // Throws DataError if `tokens` is empty or `segments` is not a partition.
  Sentence(std::vector<Token> tokens, std::vector<Span> segments);

  // A single-segment sentence.
  static Sentence whole(std::vector<Token> tokens);

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<Span>& segments() const { return segments_; }
  std::size_t size() const { return tokens_.size(); }
  std::size_t segment_count() const { return segments_.size(); }
  std::span<const Token> segment(std::size_t j) const;

 private:
  std::vector<Token> tokens_;
  std::vector<Span> segments_;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  // Paragraph ordinal of each sentence, parallel to `sentences`.
  std::vector<std::size_t> paragraph;
};

using AbbreviationList = std::unordered_set<std::string>;

// Lowercased abbreviations that never end a sentence ("sr.", "dra.", ...).
const AbbreviationList& default_abbreviations();

// Splits running text into sentence strings. A break happens after ., !, ?
// or … (plus any closing quotes/brackets) when followed by whitespace and
// then an uppercase letter, optionally behind opening punctuation such as ¿
// or «, or by the end of the text. Returned strings are whitespace-trimmed.
std::vector<std::string> split_sentences(
    std::string_view raw_text,
    const AbbreviationList& abbreviations = default_abbreviations());

// Whitespace tokenization with leading/trailing punctuation detached one
// character per token ("..." stays one token). Word-internal punctuation such
// as hyphens and apostrophes stays attached.
std::vector<Token> tokenize(std::string_view raw_sentence);

// Inverse of tokenize for ordinary prose: single spaces between tokens, no
// space before closing punctuation or after opening punctuation.
std::string detokenize(std::span<const Token> tokens);

std::vector<std::string> normalized_words(std::span<const Token> tokens);

}  // namespace sentcomp

#endif  // SENTCOMP_TEXT_H_
