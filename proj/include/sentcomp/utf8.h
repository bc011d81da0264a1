#ifndef SENTCOMP_UTF8_H_
#define SENTCOMP_UTF8_H_

#include <string>
#include <string_view>

// Minimal UTF-8 helpers covering Latin, Greek and Cyrillic case mapping.
// Enough for Spanish and the other European languages the lexicons target;
// no full Unicode tables.
namespace sentcomp::utf8 {

// Decodes one code point at `pos` and advances it. Invalid sequences yield
// U+FFFD and consume a single byte.
char32_t next(std::string_view text, std::size_t& pos);

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view text);

bool is_upper(char32_t cp);
bool is_space(char32_t cp);
bool is_punct(char32_t cp);

std::string_view trim(std::string_view text);

}  // namespace sentcomp::utf8

#endif  // SENTCOMP_UTF8_H_
