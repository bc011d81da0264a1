#ifndef SENTCOMP_REPORT_H_
#define SENTCOMP_REPORT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sentcomp/errors.h"
#include "sentcomp/metrics.h"

namespace sentcomp {

// One system's output: document id -> normalized tokens of the output text.
struct SystemOutput {
  std::string name;
  std::map<std::string, Words> documents;
};

using SourceTexts = std::map<std::string, Words>;
// Document id -> reference texts (one per annotator).
using ReferenceTexts = std::map<std::string, std::vector<Words>>;

struct SystemRow {
  std::string name;
  std::size_t documents = 0;
  double mean_cr = 0.0;
  std::optional<double> rouge1;
  std::optional<double> rouge2;
  std::optional<double> rouge_su4;
  double fresa_f1 = 0.0;
  double fresa_f2 = 0.0;
  double fresa_f4 = 0.0;
  double fresa_fm = 0.0;
};

struct EvaluationReport {
  std::vector<SystemRow> rows;
  bool has_references = false;
};

// Raised when system outputs, sources and references do not cover the same
// documents. The message lists every offending id.
class AlignmentError : public DataError {
 public:
  AlignmentError(const std::string& what, std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Per-document CR, ROUGE (when references are given) and FRESA-style scores,
// averaged over documents. F_M of a row is the mean of its F_1, F_2, F_4.
EvaluationReport build_report(std::span<const SystemOutput> systems,
                              const SourceTexts& sources,
                              const ReferenceTexts* references = nullptr);

// Plain-text table in the layout CR | ROUGE-1/2/SU4 | F_1 F_2 F_4 F_M.
std::string format_table(const EvaluationReport& report);
// A header record followed by one JSON object per system, one per line.
std::string format_jsonl(const EvaluationReport& report);

}  // namespace sentcomp

#endif  // SENTCOMP_REPORT_H_
