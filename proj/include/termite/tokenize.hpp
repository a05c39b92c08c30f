#ifndef TERMITE_TOKENIZE_HPP
#define TERMITE_TOKENIZE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "termite/stopwords.hpp"

namespace termite {

struct Token {
  std::string surface;        // lowercased, no whitespace
  std::size_t position = 0;   // 0-based index in the document token stream
  bool is_stopword = false;
  bool follows_break = false;  // a sentence boundary ( . ! ? ; : ) precedes it
};

// Splits on maximal runs of non-alphanumeric characters; apostrophes and
// hyphens survive between alphanumerics ("mid-day", "don't"). Tokens are
// lowercased, purely numeric tokens dropped. Bytes >= 0x80 are treated as
// word characters, so multi-byte UTF-8 letters stay inside tokens.
std::vector<Token> tokenize(std::string_view text, const StopwordSet& stopwords);

// Replaces bytes that do not form valid UTF-8 sequences with spaces.
std::string sanitize_utf8(std::string_view text);

}  // namespace termite

#endif  // TERMITE_TOKENIZE_HPP
