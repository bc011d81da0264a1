#include "sentcomp/report.h"

#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sentcomp/scorer.h"

namespace sentcomp {

namespace {

constexpr const char* kTokenNote =
    "token counts include punctuation tokens";

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

std::string fixed(double value, int precision) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  return buf;
}

}  // namespace

AlignmentError::AlignmentError(const std::string& what,
                               std::vector<std::string> problems)
    : DataError(what + ": " + join(problems)), problems_(std::move(problems)) {}

EvaluationReport build_report(std::span<const SystemOutput> systems,
                              const SourceTexts& sources,
                              const ReferenceTexts* references) {
  if (systems.empty()) throw DataError("no system outputs to evaluate");

  std::vector<std::string> problems;
  for (const SystemOutput& system : systems) {
    for (const auto& [id, words] : sources) {
      if (!system.documents.contains(id)) {
        problems.push_back(system.name + " lacks " + id);
      }
    }
    for (const auto& [id, words] : system.documents) {
      if (!sources.contains(id)) {
        problems.push_back(system.name + " has unknown document " + id);
      }
    }
  }
  if (references != nullptr) {
    for (const auto& [id, words] : sources) {
      auto it = references->find(id);
      if (it == references->end() || it->second.empty()) {
        problems.push_back("no reference for " + id);
      }
    }
    for (const auto& [id, refs] : *references) {
      if (!sources.contains(id)) problems.push_back("reference for unknown document " + id);
    }
  }
  if (sources.empty()) problems.push_back("no source documents");
  if (!problems.empty()) throw AlignmentError("document mismatch", problems);

  EvaluationReport report;
  report.has_references = references != nullptr;
  for (const SystemOutput& system : systems) {
    SystemRow row;
    row.name = system.name;
    row.documents = sources.size();
    double cr = 0, r1 = 0, r2 = 0, rsu4 = 0, f1 = 0, f2 = 0, f4 = 0;
    for (const auto& [id, source] : sources) {
      const Words& output = system.documents.at(id);
      cr += compression_rate(source.size(), output.size());
      const FresaScores fresa = fresa_scores(output, source);
      f1 += fresa.f1;
      f2 += fresa.f2;
      f4 += fresa.f4;
      if (references != nullptr) {
        const auto& refs = references->at(id);
        r1 += rouge_n(output, refs, 1);
        r2 += rouge_n(output, refs, 2);
        rsu4 += rouge_su4(output, refs);
      }
    }
    const double docs = static_cast<double>(sources.size());
    row.mean_cr = cr / docs;
    row.fresa_f1 = f1 / docs;
    row.fresa_f2 = f2 / docs;
    row.fresa_f4 = f4 / docs;
    row.fresa_fm = (row.fresa_f1 + row.fresa_f2 + row.fresa_f4) / 3.0;
    if (references != nullptr) {
      row.rouge1 = r1 / docs;
      row.rouge2 = r2 / docs;
      row.rouge_su4 = rsu4 / docs;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_table(const EvaluationReport& report) {
  std::ostringstream out;
  out << "# " << kFresaVariant << "\n";
  out << "# " << kTokenNote << "\n";
  out << "# documents: " << (report.rows.empty() ? 0 : report.rows.front().documents)
      << "\n\n";

  char line[256];
  if (report.has_references) {
    std::snprintf(line, sizeof(line),
                  "%-10s %8s %9s %9s %9s %8s %8s %8s %8s\n", "System",
                  "CR(%)", "ROUGE-1", "ROUGE-2", "ROUGE-SU4", "F_1", "F_2",
                  "F_4", "F_M");
  } else {
    std::snprintf(line, sizeof(line), "%-10s %8s %8s %8s %8s %8s\n", "System",
                  "CR(%)", "F_1", "F_2", "F_4", "F_M");
  }
  out << line;
  for (const SystemRow& row : report.rows) {
    const std::string cr = fixed(100.0 * row.mean_cr, 2);
    if (report.has_references) {
      std::snprintf(line, sizeof(line),
                    "%-10s %8s %9s %9s %9s %8s %8s %8s %8s\n", row.name.c_str(),
                    cr.c_str(), fixed(*row.rouge1, 4).c_str(),
                    fixed(*row.rouge2, 4).c_str(),
                    fixed(*row.rouge_su4, 4).c_str(),
                    fixed(row.fresa_f1, 4).c_str(), fixed(row.fresa_f2, 4).c_str(),
                    fixed(row.fresa_f4, 4).c_str(), fixed(row.fresa_fm, 4).c_str());
    } else {
      std::snprintf(line, sizeof(line), "%-10s %8s %8s %8s %8s %8s\n",
                    row.name.c_str(), cr.c_str(), fixed(row.fresa_f1, 4).c_str(),
                    fixed(row.fresa_f2, 4).c_str(), fixed(row.fresa_f4, 4).c_str(),
                    fixed(row.fresa_fm, 4).c_str());
    }
    out << line;
  }
  return out.str();
}

std::string format_jsonl(const EvaluationReport& report) {
  std::ostringstream out;
  nlohmann::ordered_json header;
  header["type"] = "header";
  header["fresa_variant"] = kFresaVariant;
  header["token_counts"] = kTokenNote;
  header["references"] = report.has_references;
  header["documents"] = report.rows.empty() ? 0 : report.rows.front().documents;
  out << header.dump() << '\n';
  for (const SystemRow& row : report.rows) {
    nlohmann::ordered_json record;
    record["type"] = "system";
    record["system"] = row.name;
    record["cr"] = row.mean_cr;
    if (report.has_references) {
      record["rouge1"] = *row.rouge1;
      record["rouge2"] = *row.rouge2;
      record["rouge_su4"] = *row.rouge_su4;
    }
    record["fresa_f1"] = row.fresa_f1;
    record["fresa_f2"] = row.fresa_f2;
    record["fresa_f4"] = row.fresa_f4;
    record["fresa_fm"] = row.fresa_fm;
    out << record.dump() << '\n';
  }
  return out.str();
}

}  // namespace sentcomp
