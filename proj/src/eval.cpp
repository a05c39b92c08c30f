#include "termite/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "termite/error.hpp"
#include "termite/tokenize.hpp"

namespace termite {

GoldStandard load_gold(const std::filesystem::path& path,
                       const StopwordSet& stopwords, std::size_t max_len) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::missing_file,
                "cannot open gold standard: " + path.string());
  }
  GoldStandard gold;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;

    std::vector<Token> tokens = tokenize(line, stopwords);
    // trim stopwords at the edges; interior ones fail normalization below
    std::size_t begin = 0;
    std::size_t end = tokens.size();
    while (begin < end && tokens[begin].is_stopword) ++begin;
    while (end > begin && tokens[end - 1].is_stopword) --end;
    if (begin == end) {
      ++gold.skipped;
      continue;
    }
    std::vector<std::string> words;
    for (std::size_t i = begin; i < end; ++i) words.push_back(tokens[i].surface);
    try {
      TermKey key = normalize_term(words, stopwords, max_len);
      if (gold.keys.insert(std::move(key)).second) {
        gold.raw_lines.push_back(line);
      }
    } catch (const Error&) {
      ++gold.skipped;
    }
  }
  if (gold.keys.empty()) {
    throw Error(ErrorCode::empty_gold_standard,
                "no usable terms in " + path.string());
  }
  return gold;
}

GoldStandard gold_from_keys(std::set<TermKey> keys) {
  if (keys.empty()) {
    throw Error(ErrorCode::empty_gold_standard, "no gold keys");
  }
  GoldStandard gold;
  for (const auto& key : keys) gold.raw_lines.push_back(key.joined());
  gold.keys = std::move(keys);
  return gold;
}

double precision_at_k(const RankedTermList& ranked, const GoldStandard& gold,
                      std::size_t k) {
  if (gold.keys.empty()) {
    throw Error(ErrorCode::empty_gold_standard, "gold standard is empty");
  }
  if (k < 1 || k > ranked.entries.size()) {
    throw Error(ErrorCode::k_too_large,
                "k=" + std::to_string(k) + " but only " +
                    std::to_string(ranked.entries.size()) + " ranked terms");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < k; ++i) {
    hits += gold.keys.count(ranked.entries[i].key);
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

PrecisionReport compare_methods(std::span<const RankedTermList> methods,
                                const GoldStandard& gold,
                                std::span<const std::size_t> k_values) {
  PrecisionReport report;
  report.k_values.assign(k_values.begin(), k_values.end());
  for (const auto& ranked : methods) {
    report.methods.push_back(ranked.method);
    std::vector<double> row;
    row.reserve(k_values.size());
    for (std::size_t k : k_values) {
      row.push_back(precision_at_k(ranked, gold, k));
    }
    report.precision.push_back(std::move(row));
  }
  return report;
}

void write_report_text(std::ostream& out, const PrecisionReport& report,
                       const std::string& config_echo) {
  if (!config_echo.empty()) out << "# config: " << config_echo << '\n';

  std::size_t width = 8;
  for (const auto& method : report.methods) {
    width = std::max(width, method.size() + 2);
  }
  out << "precision";
  for (std::size_t i = 9; i < width; ++i) out << ' ';
  char buf[32];
  for (std::size_t k : report.k_values) {
    std::snprintf(buf, sizeof(buf), "%8zu", k);
    out << buf;
  }
  out << '\n';
  for (std::size_t r = 0; r < report.methods.size(); ++r) {
    out << report.methods[r];
    for (std::size_t i = report.methods[r].size(); i < width; ++i) out << ' ';
    for (double p : report.precision[r]) {
      std::snprintf(buf, sizeof(buf), "%8.3f", p);
      out << buf;
    }
    out << '\n';
  }
}

void write_report_csv(std::ostream& out, const PrecisionReport& report,
                      const std::string& config_echo) {
  if (!config_echo.empty()) out << "# config: " << config_echo << '\n';
  out << "method";
  for (std::size_t k : report.k_values) out << ',' << k;
  out << '\n';
  char buf[32];
  for (std::size_t r = 0; r < report.methods.size(); ++r) {
    out << report.methods[r];
    for (double p : report.precision[r]) {
      std::snprintf(buf, sizeof(buf), "%.6f", p);
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace termite
