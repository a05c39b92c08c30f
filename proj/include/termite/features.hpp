#ifndef TERMITE_FEATURES_HPP
#define TERMITE_FEATURES_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "termite/candidates.hpp"
#include "termite/corpus.hpp"
#include "termite/term.hpp"

namespace termite {

// Immutable frequency tables over the target domain and each contrastive
// domain, restricted to the target candidate vocabulary. Candidate index
// order follows the (sorted) candidate set it was built from.
struct FrequencyModel {
  std::vector<TermKey> keys;
  std::vector<std::int64_t> target_freq;  // f_t in the target domain
  std::int64_t target_mass = 0;           // sum of target_freq

  // Per candidate: (target doc index, frequency in that doc), doc index asc.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> doc_freq;
  // Per candidate: (target doc index, earliest first-word position).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> first_positions;

  std::vector<std::string> target_doc_ids;
  std::vector<std::size_t> target_doc_token_counts;

  std::vector<std::string> contrastive_names;
  std::vector<std::vector<std::int64_t>> contrastive_freq;  // [domain][cand]
  std::vector<std::int64_t> contrastive_mass;

  // Target token frequency per stem, stopwords excluded.
  std::unordered_map<std::string, std::int64_t> word_freq;

  std::size_t index_of(const TermKey& key) const;  // throws UnknownTerm

  // Rebuilds the key lookup after keys were assigned by hand.
  void reindex();

 private:
  std::unordered_map<std::string, std::size_t> key_index_;
};

FrequencyModel build_frequency_model(const Corpus& target,
                                     std::span<const Corpus> contrastive,
                                     std::span<const CandidateTerm> candidates,
                                     std::size_t max_len);

// f1: ratio of the term's normalized target frequency to the maximum
// normalized frequency over all domains (target included), in [0,1].
double domain_relevance(const TermKey& t, const FrequencyModel& m);

// f2: entropy (base 2) of the term's distribution across target documents.
double domain_consensus(const TermKey& t, const FrequencyModel& m);

// f3: |N| * F(t) * log10(F(t)) / sum of component word frequencies.
double term_cohesion(const TermKey& t, const FrequencyModel& m);

// f4: 1 - mean over containing documents of (first position / doc length),
// so earlier appearances score higher.
double first_occurrence(const TermKey& t, const FrequencyModel& m);

// f5: frequency times length in words.
double np_length_score(const TermKey& t, const FrequencyModel& m);

struct FeatureVector {
  std::array<double, 5> raw{};
  std::array<double, 5> normalized{};
};

struct FeatureMatrix {
  std::vector<TermKey> keys;  // sorted ascending
  std::vector<FeatureVector> rows;

  std::size_t size() const { return keys.size(); }
};

// All five raw features per candidate, then min-max normalization of each
// column to [0,1]; a constant column normalizes to all zeros.
FeatureMatrix feature_matrix(std::span<const CandidateTerm> candidates,
                             const FrequencyModel& m);

// Tab-delimited rows: term, five raw values, five normalized values.
void write_feature_matrix(std::ostream& out, const FeatureMatrix& matrix);

}  // namespace termite

#endif  // TERMITE_FEATURES_HPP
