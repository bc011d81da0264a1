#include "sentcomp/text.h"

#include <algorithm>

#include "sentcomp/errors.h"
#include "sentcomp/utf8.h"

namespace sentcomp {

namespace {

bool is_terminal(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x2026;
}

bool is_closer(char32_t cp) {
  switch (cp) {
    case '"':
    case '\'':
    case ')':
    case ']':
    case '}':
    case 0xBB:    // »
    case 0x2019:  // ’
    case 0x201D:  // ”
      return true;
    default:
      return false;
  }
}

bool is_opener(char32_t cp) {
  switch (cp) {
    case '"':
    case '\'':
    case '(':
    case '[':
    case '{':
    case 0xA1:    // ¡
    case 0xAB:    // «
    case 0xBF:    // ¿
    case 0x2014:  // U+2014
    case 0x2018:  // ‘
    case 0x201C:  // “
      return true;
    default:
      return false;
  }
}

bool all_punct(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!utf8::is_punct(utf8::next(text, pos))) return false;
  }
  return !text.empty();
}

// Last whitespace-delimited word ending right before `end`, stripped of
// opening punctuation and lowercased.
std::string word_before(const std::u32string& text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !utf8::is_space(text[begin - 1])) --begin;
  while (begin < end && is_opener(text[begin])) ++begin;
  return utf8::to_lower(utf8::encode(
      std::u32string_view(text).substr(begin, end - begin)));
}

}  // namespace

Token Token::make(std::string_view surface) {
  if (utf8::trim(surface).empty()) throw DataError("empty token surface");
  Token token;
  token.surface = std::string(surface);
  token.normalized = utf8::to_lower(utf8::trim(surface));
  token.is_punct = all_punct(token.normalized);
  return token;
}

Sentence::Sentence(std::vector<Token> tokens, std::vector<Span> segments)
    : tokens_(std::move(tokens)), segments_(std::move(segments)) {
  if (tokens_.empty()) throw DataError("sentence has no tokens");
  if (segments_.empty()) throw DataError("sentence has no segments");
  std::size_t expected = 0;
  for (const Span& span : segments_) {
    if (span.begin != expected || span.end <= span.begin) {
      throw DataError("segment bounds do not partition the sentence");
    }
    expected = span.end;
  }
  if (expected != tokens_.size()) {
    throw DataError("segment bounds do not cover the sentence");
  }
}

Sentence Sentence::whole(std::vector<Token> tokens) {
  const std::size_t n = tokens.size();
  return Sentence(std::move(tokens), {Span{0, n}});
}

std::span<const Token> Sentence::segment(std::size_t j) const {
  const Span& span = segments_.at(j);
  return std::span<const Token>(tokens_).subspan(span.begin, span.size());
}

const AbbreviationList& default_abbreviations() {
  static const AbbreviationList kAbbreviations = {
      "sr.",   "sra.",  "srta.", "sres.", "dr.",  "dra.",  "drs.",
      "ud.",   "uds.",  "vd.",   "vds.",  "d.",   "da.",   "dña.",
      "etc.",  "pág.",  "págs.", "p.",    "pp.",  "núm.",  "nº.",
      "art.",  "cap.",  "fig.",  "vol.",  "ed.",  "eds.",  "av.",
      "avda.", "c.",    "cía.",  "s.a.",  "ej.",  "p.ej.", "aprox.",
      "lic.",  "ing.",  "prof.", "mr.",   "mrs.", "ms.",   "vs.",
      "e.g.",  "i.e.",  "a.c.",  "d.c.",  "a.m.", "p.m.",  "tel.",
  };
  return kAbbreviations;
}

std::vector<std::string> split_sentences(
    std::string_view raw_text, const AbbreviationList& abbreviations) {
  const std::u32string text = utf8::decode(raw_text);
  std::vector<std::string> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    const std::string piece = utf8::encode(
        std::u32string_view(text).substr(begin, end - begin));
    const std::string_view trimmed = utf8::trim(piece);
    if (!trimmed.empty()) sentences.emplace_back(trimmed);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && (is_terminal(text[end]) || is_closer(text[end])))
      ++end;
    if (end < text.size() && !utf8::is_space(text[end])) {
      i = end;
      continue;
    }
    std::size_t next = end;
    while (next < text.size() && utf8::is_space(text[next])) ++next;
    bool boundary = next == text.size();
    if (!boundary) {
      std::size_t probe = next;
      while (probe < text.size() && is_opener(text[probe])) ++probe;
      boundary = probe < text.size() && utf8::is_upper(text[probe]);
    }
    if (boundary && text[i] == '.' && i + 1 == end) {
      if (abbreviations.contains(word_before(text, i + 1))) boundary = false;
    }
    if (boundary) {
      emit(start, end);
      start = next;
    }
    i = end;
  }
  emit(start, text.size());
  return sentences;
}

std::vector<Token> tokenize(std::string_view raw_sentence) {
  std::vector<Token> tokens;
  const std::u32string text = utf8::decode(raw_sentence);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::is_space(text[i])) ++i;
    std::size_t end = i;
    while (end < text.size() && !utf8::is_space(text[end])) ++end;
    if (end == i) break;

    std::u32string_view chunk = std::u32string_view(text).substr(i, end - i);
    i = end;

    // A run of periods is one ellipsis token.
    auto punct_len = [](std::u32string_view s, std::size_t at) {
      std::size_t len = 1;
      if (s[at] == '.') {
        while (at + len < s.size() && s[at + len] == '.') ++len;
      }
      return len;
    };

    std::size_t lead = 0;
    std::vector<Token> leading;
    while (lead < chunk.size() && utf8::is_punct(chunk[lead])) {
      const std::size_t len = punct_len(chunk, lead);
      leading.push_back(Token::make(utf8::encode(chunk.substr(lead, len))));
      lead += len;
    }
    std::size_t tail = chunk.size();
    std::vector<Token> trailing;
    while (tail > lead && utf8::is_punct(chunk[tail - 1])) {
      std::size_t begin = tail - 1;
      if (chunk[begin] == '.') {
        while (begin > lead && chunk[begin - 1] == '.') --begin;
      }
      trailing.push_back(
          Token::make(utf8::encode(chunk.substr(begin, tail - begin))));
      tail = begin;
    }
    tokens.insert(tokens.end(), leading.begin(), leading.end());
    if (tail > lead) {
      tokens.push_back(Token::make(utf8::encode(chunk.substr(lead, tail - lead))));
    }
    tokens.insert(tokens.end(), trailing.rbegin(), trailing.rend());
  }
  return tokens;
}

std::string detokenize(std::span<const Token> tokens) {
  static const std::unordered_set<std::string> kClosing = {
      ".", ",", ";", ":", "!", "?", ")", "]", "}", "»", "…", "”", "’", "%"};
  static const std::unordered_set<std::string> kOpening = {
      "¿", "¡", "(", "[", "{", "«", "“", "‘"};
  std::string out;
  bool glue_next = true;
  bool inside_quote = false;
  for (const Token& token : tokens) {
    const std::string& s = token.surface;
    bool glue_before = glue_next;
    glue_next = false;
    if (s == "\"") {
      if (inside_quote) {
        glue_before = true;
      } else {
        glue_next = true;
      }
      inside_quote = !inside_quote;
    } else if (kClosing.contains(s) ||
               (token.is_punct && s.find('.') == 0 &&
                s.find_first_not_of('.') == std::string::npos)) {
      glue_before = true;
    } else if (kOpening.contains(s)) {
      glue_next = true;
    }
    if (!glue_before) out.push_back(' ');
    out += s;
  }
  return out;
}

std::vector<std::string> normalized_words(std::span<const Token> tokens) {
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const Token& token : tokens) words.push_back(token.normalized);
  return words;
}

}  // namespace sentcomp
