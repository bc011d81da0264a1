#ifndef SENTCOMP_CORPUS_IO_H_
#define SENTCOMP_CORPUS_IO_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sentcomp/metrics.h"
#include "sentcomp/text.h"

namespace sentcomp {

// `*.txt` files directly inside `dir`, sorted by file name. Throws DataError
// when `dir` is not a readable directory.
std::vector<std::filesystem::path> list_documents(const std::filesystem::path& dir);

// The id of a document file: its name without the .txt extension.
std::string document_id(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// UTF-8 text, paragraphs separated by blank lines. Every sentence comes back
// as a single segment.
Document parse_document(std::string id, std::string_view text,
                        const AbbreviationList& abbreviations = default_abbreviations());
Document read_document(const std::filesystem::path& path,
                       const AbbreviationList& abbreviations = default_abbreviations());
std::vector<Document> load_corpus(const std::filesystem::path& dir);

// One sentence per line, a blank line between paragraphs.
std::string render_document(const std::vector<std::string>& sentences,
                            const std::vector<std::size_t>& paragraph);

// Normalized tokens of a whole file, for the metrics.
Words read_words(const std::filesystem::path& path);

}  // namespace sentcomp

#endif  // SENTCOMP_CORPUS_IO_H_
