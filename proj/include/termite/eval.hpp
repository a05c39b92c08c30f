#ifndef TERMITE_EVAL_HPP
#define TERMITE_EVAL_HPP

#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "termite/scoring.hpp"
#include "termite/stopwords.hpp"
#include "termite/term.hpp"

namespace termite {

struct GoldStandard {
  std::set<TermKey> keys;
  std::vector<std::string> raw_lines;  // lines that produced a key
  std::size_t skipped = 0;             // lines that did not normalize
};

// One term per line, '#' comments and blank lines ignored. Lines are
// normalized like candidates (lowercase, stopwords trimmed at the edges,
// stemmed); lines that fail to normalize are counted in `skipped`.
GoldStandard load_gold(const std::filesystem::path& path,
                       const StopwordSet& stopwords, std::size_t max_len);

// Builds a GoldStandard from already-normalized keys.
GoldStandard gold_from_keys(std::set<TermKey> keys);

// Fraction of the top-k entries that are gold terms.
double precision_at_k(const RankedTermList& ranked, const GoldStandard& gold,
                      std::size_t k);

struct PrecisionReport {
  std::vector<std::size_t> k_values;
  std::vector<std::string> methods;            // row order as given
  std::vector<std::vector<double>> precision;  // [method][k index]
};

PrecisionReport compare_methods(std::span<const RankedTermList> methods,
                                const GoldStandard& gold,
                                std::span<const std::size_t> k_values);

void write_report_text(std::ostream& out, const PrecisionReport& report,
                       const std::string& config_echo = {});
void write_report_csv(std::ostream& out, const PrecisionReport& report,
                      const std::string& config_echo = {});

}  // namespace termite

#endif  // TERMITE_EVAL_HPP
