#ifndef TERMITE_SCORING_HPP
#define TERMITE_SCORING_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "termite/features.hpp"
#include "termite/pso.hpp"

namespace termite {

struct RankedEntry {
  std::size_t rank = 0;  // 1-based
  TermKey key;
  double score = 0.0;
};

// Scores non-increasing with rank; equal scores ordered by key.
struct RankedTermList {
  std::string method;
  std::vector<RankedEntry> entries;
};

// Weighted sum of the normalized features.
double score_term(const FeatureVector& fv, const Vec5& weights);

RankedTermList rank_by_weights(const FeatureMatrix& features,
                               const Vec5& weights, std::string method);

inline RankedTermList rank_swarm(const FeatureMatrix& features,
                                 const Vec5& weights) {
  return rank_by_weights(features, weights, "swarm");
}

// tf * ln(N / df) over the pooled target + contrastive document collection.
RankedTermList rank_tfidf(std::span<const CandidateTerm> candidates,
                          const Corpus& target,
                          std::span<const Corpus> contrastive,
                          std::size_t max_len);

// Normalized target frequency over add-one-smoothed normalized frequency in
// the pooled contrastive corpora.
double weirdness_score(std::int64_t target_freq, std::int64_t target_mass,
                       std::int64_t contrastive_freq,
                       std::int64_t contrastive_mass);

RankedTermList rank_weirdness(const FrequencyModel& m);

// Equal-weight mix of min-max-normalized weirdness and term cohesion.
RankedTermList rank_glossary(const FeatureMatrix& features,
                             const FrequencyModel& m);

// Mean of the normalized domain relevance, consensus and cohesion features.
RankedTermList rank_termextractor(const FeatureMatrix& features);

// Header line with the method name, then tab-delimited
// (rank, space-joined stems, score to six decimals) rows.
void write_ranked_list(std::ostream& out, const RankedTermList& list,
                       const std::string& config_echo = {},
                       std::size_t top_n = 0);

RankedTermList read_ranked_list(std::istream& in, const std::string& source);

}  // namespace termite

#endif  // TERMITE_SCORING_HPP
