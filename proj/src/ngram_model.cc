#include "sentcomp/ngram_model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sentcomp/errors.h"

namespace sentcomp {

namespace {

constexpr int kMaxOrder = 10;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    if (at == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, at - start));
    start = at + 1;
  }
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

bool parse_double(std::string_view text, double& value) {
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  return result.ec == std::errc() && result.ptr == text.data() + text.size();
}

template <typename Int>
bool parse_int(std::string_view text, Int& value) {
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  return result.ec == std::errc() && result.ptr == text.data() + text.size();
}

std::vector<double> expand_lambdas(int order, std::vector<double> lambdas) {
  const std::size_t needed = order > 1 ? static_cast<std::size_t>(order - 1) : 0;
  if (lambdas.empty()) lambdas.assign(needed, 0.5);
  if (lambdas.size() == 1) lambdas.assign(needed, lambdas.front());
  if (lambdas.size() != needed) {
    throw ConfigError("expected " + std::to_string(needed) +
                      " interpolation weights for order " +
                      std::to_string(order) + ", got " +
                      std::to_string(lambdas.size()));
  }
  for (double lambda : lambdas) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
      throw ConfigError("interpolation weight " + format_double(lambda) +
                        " is outside [0, 1]");
    }
  }
  return lambdas;
}

}  // namespace

NGramModel::NGramModel(int order, std::vector<double> lambdas, bool reserve_unk)
    : order_(order), reserve_unk_(reserve_unk) {
  if (order < 1 || order > kMaxOrder) {
    throw ConfigError("model order must be in [1, " +
                      std::to_string(kMaxOrder) + "]");
  }
  lambdas_ = expand_lambdas(order, std::move(lambdas));
  words_ = {std::string(kUnk), std::string(kBos), std::string(kEos)};
  for (WordId id = 0; id < words_.size(); ++id) ids_.emplace(words_[id], id);
  counts_.resize(order);
  totals_.resize(order);
}

NGramModel NGramModel::train(std::span<const std::vector<std::string>> sentences,
                             const TrainOptions& options) {
  NGramModel model(options.order, options.lambdas, options.reserve_unk);
  const std::size_t n = static_cast<std::size_t>(model.order_);
  Key padded;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    padded.assign(n - 1, kBosId);
    for (const std::string& word : sentence) {
      if (word == kBos || word == kEos || word == kUnk) {
        throw DataError("corpus contains reserved symbol " + word);
      }
      padded.push_back(model.intern(word));
    }
    if (n >= 2) padded.push_back(kEosId);
    for (std::size_t p = n - 1; p < padded.size(); ++p) {
      for (std::size_t m = 1; m <= n; ++m) {
        model.add(Key(padded.begin() + (p + 1 - m), padded.begin() + (p + 1)), 1);
      }
    }
  }
  if (model.total_ == 0) throw DataError("training corpus is empty");
  return model;
}

NGramModel::WordId NGramModel::intern(std::string_view word) {
  auto it = ids_.find(std::string(word));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  ids_.emplace(words_.back(), id);
  return id;
}

NGramModel::WordId NGramModel::lookup(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnkId : it->second;
}

NGramModel::Key NGramModel::to_key(std::span<const std::string> words) const {
  Key key;
  key.reserve(words.size());
  for (const std::string& word : words) key.push_back(lookup(word));
  return key;
}

void NGramModel::add(const Key& ngram, std::uint64_t count) {
  const std::size_t m = ngram.size();
  counts_[m - 1][ngram] += count;
  if (m == 1) {
    total_ += count;
  } else {
    totals_[m - 1][Key(ngram.begin(), ngram.end() - 1)] += count;
  }
}

double NGramModel::lambda(int m) const {
  if (m < 2 || m > order_) throw ConfigError("no interpolation weight for order " + std::to_string(m));
  return lambdas_[static_cast<std::size_t>(m - 2)];
}

void NGramModel::set_lambdas(std::vector<double> lambdas) {
  lambdas_ = expand_lambdas(order_, std::move(lambdas));
}

std::uint64_t NGramModel::count(std::span<const std::string> ngram) const {
  if (ngram.empty() || ngram.size() > static_cast<std::size_t>(order_)) return 0;
  const auto& table = counts_[ngram.size() - 1];
  auto it = table.find(to_key(ngram));
  return it == table.end() ? 0 : it->second;
}

std::uint64_t NGramModel::context_total(std::span<const std::string> context) const {
  if (context.empty()) return total_;
  if (context.size() >= static_cast<std::size_t>(order_)) return 0;
  const auto& table = totals_[context.size()];
  auto it = table.find(to_key(context));
  return it == table.end() ? 0 : it->second;
}

double NGramModel::mle_prob(std::span<const std::string> context,
                            std::string_view word) const {
  if (context.size() >= static_cast<std::size_t>(order_)) {
    throw ConfigError("context of length " + std::to_string(context.size()) +
                      " exceeds model order " + std::to_string(order_));
  }
  const std::uint64_t total = context_total(context);
  if (total == 0) return 0.0;
  std::vector<std::string> ngram(context.begin(), context.end());
  ngram.emplace_back(word);
  return static_cast<double>(count(ngram)) / static_cast<double>(total);
}

double NGramModel::unigram_id(WordId word) const {
  std::uint64_t c = 0;
  if (word != kBosId && word != kUnkId) {
    auto it = counts_[0].find(Key{word});
    if (it != counts_[0].end()) c = it->second;
  }
  if (!reserve_unk_) return static_cast<double>(c) / static_cast<double>(total_);
  const double denom = static_cast<double>(total_ + counts_[0].size() + 1);
  return static_cast<double>(c + 1) / denom;
}

double NGramModel::unigram_prob(std::string_view word) const {
  return unigram_id(lookup(word));
}

double NGramModel::unk_mass() const { return reserve_unk_ ? unigram_id(kUnkId) : 0.0; }

double NGramModel::interp_ids(const WordId* context, std::size_t context_len,
                              WordId word) const {
  const std::size_t keep = std::min(context_len, static_cast<std::size_t>(order_ - 1));
  context += context_len - keep;
  context_len = keep;
  double p = unigram_id(word);
  Key key;
  for (std::size_t m = 2; m <= context_len + 1; ++m) {
    key.assign(context + (context_len - (m - 1)), context + context_len);
    const auto& totals = totals_[m - 1];
    auto total = totals.find(key);
    if (total == totals.end()) continue;
    key.push_back(word);
    const auto& counts = counts_[m - 1];
    auto hit = counts.find(key);
    const double ml = hit == counts.end()
                          ? 0.0
                          : static_cast<double>(hit->second) /
                                static_cast<double>(total->second);
    const double weight = lambdas_[m - 2];
    p = weight * ml + (1.0 - weight) * p;
  }
  return p;
}

double NGramModel::interp_prob(std::span<const std::string> context,
                               std::string_view word) const {
  const Key ids = to_key(context);
  return interp_ids(ids.data(), ids.size(), lookup(word));
}

double NGramModel::sequence_logprob(std::span<const std::string> words) const {
  if (words.empty()) throw DataError("cannot score an empty word sequence");
  const std::size_t n = static_cast<std::size_t>(order_);
  Key padded(n - 1, kBosId);
  for (const std::string& word : words) padded.push_back(lookup(word));
  if (n >= 2) padded.push_back(kEosId);
  double logprob = 0.0;
  for (std::size_t p = n - 1; p < padded.size(); ++p) {
    const double prob = interp_ids(padded.data() + (p - (n - 1)), n - 1, padded[p]);
    if (!(prob > 0.0)) {
      throw DataError("zero-probability event '" + words_[padded[p]] +
                      "' (closed vocabulary or unit interpolation weight)");
    }
    logprob += std::log(prob);
  }
  return logprob;
}

std::size_t NGramModel::vocab_size() const {
  const bool has_eos = counts_[0].contains(Key{kEosId});
  return counts_[0].size() - (has_eos ? 1 : 0);
}

std::vector<std::string> NGramModel::outcomes() const {
  std::vector<std::string> out;
  for (const auto& [key, count] : counts_[0]) out.push_back(words_[key.front()]);
  if (reserve_unk_) out.emplace_back(kUnk);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> NGramModel::observed_contexts(int m) const {
  if (m < 1 || m > order_) return {};
  if (m == 1) return {{}};
  std::vector<std::vector<std::string>> out;
  for (const auto& [key, total] : totals_[static_cast<std::size_t>(m - 1)]) {
    std::vector<std::string> context;
    for (WordId id : key) context.push_back(words_[id]);
    out.push_back(std::move(context));
  }
  return out;
}

std::size_t NGramModel::ngram_types(int m) const {
  if (m < 1 || m > order_) return 0;
  return counts_[static_cast<std::size_t>(m - 1)].size();
}

void NGramModel::save(std::ostream& out) const {
  out << "sentcomp-ngram\torder=" << order_ << "\tvocab=" << vocab_size()
      << "\tlambdas=";
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(lambdas_[i]);
  }
  out << "\tunk=" << (reserve_unk_ ? 1 : 0) << '\n';
  for (std::size_t m = 1; m <= counts_.size(); ++m) {
    std::vector<std::pair<std::string, std::uint64_t>> lines;
    lines.reserve(counts_[m - 1].size());
    for (const auto& [key, count] : counts_[m - 1]) {
      std::string text;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (i > 0) text.push_back(' ');
        text += words_[key[i]];
      }
      lines.emplace_back(std::move(text), count);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [text, count] : lines) {
      out << m << '\t' << text << '\t' << count << '\n';
    }
  }
}

void NGramModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model " + path.string());
  save(out);
  if (!out) throw DataError("error writing model " + path.string());
}

NGramModel NGramModel::load(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(source, 1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line, '\t');
  if (header.empty() || header[0] != "sentcomp-ngram") {
    throw ParseError(source, 1, "not a sentcomp n-gram model");
  }
  std::map<std::string, std::string> fields;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const std::size_t eq = header[i].find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(source, 1, "malformed header field '" + std::string(header[i]) + "'");
    }
    fields[std::string(header[i].substr(0, eq))] = std::string(header[i].substr(eq + 1));
  }
  for (const char* key : {"order", "vocab", "lambdas", "unk"}) {
    if (!fields.contains(key)) {
      throw ParseError(source, 1, std::string("header lacks ") + key);
    }
  }
  int order = 0;
  std::size_t vocab = 0;
  if (!parse_int(fields["order"], order)) throw ParseError(source, 1, "bad order");
  if (!parse_int(fields["vocab"], vocab)) throw ParseError(source, 1, "bad vocab size");
  if (fields["unk"] != "0" && fields["unk"] != "1") throw ParseError(source, 1, "bad unk flag");
  std::vector<double> lambdas;
  if (!fields["lambdas"].empty()) {
    for (std::string_view part : split(fields["lambdas"], ',')) {
      double value = 0;
      if (!parse_double(part, value)) {
        throw ParseError(source, 1, "bad interpolation weight '" + std::string(part) + "'");
      }
      lambdas.push_back(value);
    }
  }
  if (order > 1 && lambdas.size() != static_cast<std::size_t>(order - 1)) {
    throw ParseError(source, 1, "wrong number of interpolation weights");
  }

  NGramModel model = [&] {
    try {
      return NGramModel(order, lambdas, fields["unk"] == "1");
    } catch (const ConfigError& e) {
      throw ParseError(source, 1, e.what());
    }
  }();

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto parts = split(line, '\t');
    if (parts.size() != 3) throw ParseError(source, line_no, "expected order<TAB>tokens<TAB>count");
    int m = 0;
    if (!parse_int(parts[0], m) || m < 1 || m > order) {
      throw ParseError(source, line_no, "bad n-gram order '" + std::string(parts[0]) + "'");
    }
    const auto tokens = split(parts[1], ' ');
    if (tokens.size() != static_cast<std::size_t>(m)) {
      throw ParseError(source, line_no, "expected " + std::to_string(m) + " tokens");
    }
    std::uint64_t count = 0;
    if (!parse_int(parts[2], count) || count == 0) {
      throw ParseError(source, line_no, "bad count '" + std::string(parts[2]) + "'");
    }
    Key key;
    for (std::string_view token : tokens) {
      if (token.empty()) throw ParseError(source, line_no, "empty token");
      key.push_back(model.intern(token));
    }
    if (key.back() == kBosId || key.back() == kUnkId) {
      throw ParseError(source, line_no, "sentinel cannot be a predicted word");
    }
    if (model.counts_[m - 1].contains(key)) {
      throw ParseError(source, line_no, "duplicate n-gram");
    }
    model.add(key, count);
  }
  if (model.total_ == 0) throw ParseError(source, line_no, "model has no unigrams");
  if (model.vocab_size() != vocab) {
    throw ParseError(source, 1, "header vocab " + std::to_string(vocab) +
                                    " does not match " +
                                    std::to_string(model.vocab_size()) +
                                    " unigram types");
  }
  return model;
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model " + path.string());
  return load(in, path.string());
}

}  // namespace sentcomp
