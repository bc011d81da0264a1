#include "sentcomp/segmenter.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string_view>

#include "sentcomp/errors.h"
#include "sentcomp/utf8.h"

namespace sentcomp {

namespace internal {
extern const std::string_view kDefaultLexiconText;
}  // namespace internal

std::size_t Marker::boundary_offset() const {
  if (position == MarkerPosition::kAfter) return phrase.size();
  std::size_t offset = 0;
  while (offset + 1 < phrase.size() &&
         Token::make(phrase[offset]).is_punct) {
    ++offset;
  }
  return offset;
}

MarkerLexicon::MarkerLexicon(std::vector<Marker> markers,
                             std::size_t min_segment_tokens)
    : markers_(std::move(markers)), min_segment_tokens_(min_segment_tokens) {
  if (min_segment_tokens_ == 0) {
    throw ConfigError("min_segment_tokens must be at least 1");
  }
  for (const Marker& marker : markers_) {
    if (marker.phrase.empty()) throw ConfigError("empty marker phrase");
    for (const std::string& word : marker.phrase) {
      if (word.empty() || word != utf8::to_lower(utf8::trim(word))) {
        throw ConfigError("marker phrase token '" + word +
                          "' is not normalized");
      }
    }
  }
  // Longest first so that longest_match can stop at the first hit.
  std::stable_sort(markers_.begin(), markers_.end(),
                   [](const Marker& a, const Marker& b) {
                     return a.phrase.size() > b.phrase.size();
                   });
}

MarkerLexicon MarkerLexicon::parse(std::istream& in, const std::string& source,
                                   std::size_t min_segment_tokens) {
  std::vector<Marker> markers;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (utf8::trim(line).empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(source, line_no, "expected phrase<TAB>position");
    }
    const std::string_view position = utf8::trim(std::string_view(line).substr(tab + 1));
    Marker marker;
    if (position == "before" || position == "boundary-before") {
      marker.position = MarkerPosition::kBefore;
    } else if (position == "after" || position == "boundary-after") {
      marker.position = MarkerPosition::kAfter;
    } else {
      throw ParseError(source, line_no,
                       "unknown position class '" + std::string(position) + "'");
    }
    marker.phrase = normalized_words(tokenize(line.substr(0, tab)));
    if (marker.phrase.empty()) throw ParseError(source, line_no, "empty phrase");
    markers.push_back(std::move(marker));
  }
  return MarkerLexicon(std::move(markers), min_segment_tokens);
}

MarkerLexicon MarkerLexicon::load(const std::filesystem::path& path,
                                  std::size_t min_segment_tokens) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open lexicon " + path.string());
  return parse(in, path.string(), min_segment_tokens);
}

MarkerLexicon MarkerLexicon::default_spanish(std::size_t min_segment_tokens) {
  std::istringstream in{std::string(internal::kDefaultLexiconText)};
  return parse(in, "<default lexicon>", min_segment_tokens);
}

const Marker* MarkerLexicon::longest_match(std::span<const std::string> words,
                                           std::size_t at) const {
  for (const Marker& marker : markers_) {
    if (at + marker.phrase.size() > words.size()) continue;
    if (std::equal(marker.phrase.begin(), marker.phrase.end(),
                   words.begin() + at)) {
      return &marker;
    }
  }
  return nullptr;
}

Sentence segment(std::span<const Token> tokens, const MarkerLexicon& lexicon) {
  if (tokens.empty()) throw DataError("cannot segment an empty sentence");
  const std::vector<std::string> words = normalized_words(tokens);
  const std::size_t n = words.size();

  std::vector<std::size_t> proposals;
  for (std::size_t i = 0; i < n; ++i) {
    if (const Marker* marker = lexicon.longest_match(words, i)) {
      const std::size_t at = i + marker->boundary_offset();
      if (at > 0 && at < n) proposals.push_back(at);
    }
  }
  std::sort(proposals.begin(), proposals.end());
  proposals.erase(std::unique(proposals.begin(), proposals.end()),
                  proposals.end());

  const std::size_t min_len = lexicon.min_segment_tokens();
  std::vector<Span> segments;
  std::size_t open = 0;
  for (std::size_t at : proposals) {
    if (at - open >= min_len && n - at >= min_len) {
      segments.push_back({open, at});
      open = at;
    }
  }
  segments.push_back({open, n});
  return Sentence(std::vector<Token>(tokens.begin(), tokens.end()),
                  std::move(segments));
}

}  // namespace sentcomp
