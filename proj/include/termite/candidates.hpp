#ifndef TERMITE_CANDIDATES_HPP
#define TERMITE_CANDIDATES_HPP

#include <cstdint>
#include <vector>

#include "termite/corpus.hpp"
#include "termite/term.hpp"

namespace termite {

struct Emission {
  TermKey key;
  Occurrence occurrence;
  std::string surface;  // space-joined token surfaces
};

// Stopword-delimited chunking: the token stream is cut at stopwords and
// sentence boundaries, and every contiguous sub-sequence of a chunk with
// 1..max_len words becomes a candidate emission. Stands in for the noun
// phrases a syntactic parser would produce; swap this stage out to use one.
std::vector<Emission> generate_candidates(const Document& doc,
                                          std::size_t max_len);

// Merge emissions by key over the whole corpus, drop keys with total
// frequency < min_freq, sort keys and occurrences for determinism.
std::vector<CandidateTerm> build_candidate_set(const Corpus& target,
                                               std::size_t max_len,
                                               std::int64_t min_freq = 1);

}  // namespace termite

#endif  // TERMITE_CANDIDATES_HPP
