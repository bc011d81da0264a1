#include "sentcomp/corpus_io.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "sentcomp/errors.h"
#include "sentcomp/utf8.h"

namespace sentcomp {

namespace fs = std::filesystem;

std::vector<fs::path> list_documents(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw DataError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  if (ec) throw DataError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename() < b.filename();
  });
  return files;
}

std::string document_id(const fs::path& path) { return path.stem().string(); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw DataError("error reading " + path.string());
  return buf.str();
}

void write_file(const fs::path& path, std::string_view contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("error writing " + path.string());
}

Document parse_document(std::string id, std::string_view text,
                        const AbbreviationList& abbreviations) {
  Document doc;
  doc.id = std::move(id);
  std::size_t paragraph = 0;
  std::string current;
  auto flush = [&] {
    if (utf8::trim(current).empty()) {
      current.clear();
      return;
    }
    for (const std::string& raw : split_sentences(current, abbreviations)) {
      std::vector<Token> tokens = tokenize(raw);
      if (tokens.empty()) continue;
      doc.sentences.push_back(Sentence::whole(std::move(tokens)));
      doc.paragraph.push_back(paragraph);
    }
    ++paragraph;
    current.clear();
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (utf8::trim(line).empty()) {
      flush();
    } else {
      current.append(line);
      current.push_back('\n');
    }
    start = end + 1;
  }
  flush();
  return doc;
}

Document read_document(const fs::path& path, const AbbreviationList& abbreviations) {
  return parse_document(document_id(path), read_file(path), abbreviations);
}

std::vector<Document> load_corpus(const fs::path& dir) {
  std::vector<Document> docs;
  for (const fs::path& path : list_documents(dir)) docs.push_back(read_document(path));
  return docs;
}

std::string render_document(const std::vector<std::string>& sentences,
                            const std::vector<std::size_t>& paragraph) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i > 0 && paragraph[i] != paragraph[i - 1]) out.push_back('\n');
    out += sentences[i];
    out.push_back('\n');
  }
  return out;
}

Words read_words(const fs::path& path) {
  return normalized_words(tokenize(read_file(path)));
}

}  // namespace sentcomp
