#ifndef TERMITE_TERM_HPP
#define TERMITE_TERM_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "termite/stopwords.hpp"

namespace termite {

// Identity of a candidate: the ordered stemmed words. Equality and ordering
// are element-wise, which is also the identity used for gold matching.
struct TermKey {
  std::vector<std::string> stems;

  auto operator<=>(const TermKey&) const = default;

  std::size_t length() const { return stems.size(); }
  std::string joined() const;  // stems separated by single spaces
};

struct Occurrence {
  std::string doc_id;
  std::size_t first_word_position = 0;

  auto operator<=>(const Occurrence&) const = default;
};

struct CandidateTerm {
  TermKey key;
  std::set<std::string> surface_forms;
  std::vector<Occurrence> occurrences;

  std::int64_t frequency() const {
    return static_cast<std::int64_t>(occurrences.size());
  }
};

// Lowercase then stem each word, order preserved. Throws Empty / TooLong /
// ContainsStopword on violated preconditions.
TermKey normalize_term(std::span<const std::string> words,
                       const StopwordSet& stopwords, std::size_t max_len);

}  // namespace termite

#endif  // TERMITE_TERM_HPP
