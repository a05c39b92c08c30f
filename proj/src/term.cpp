#include "termite/term.hpp"

#include <algorithm>
#include <cctype>

#include "termite/error.hpp"
#include "termite/porter.hpp"

namespace termite {

std::string TermKey::joined() const {
  std::string out;
  for (std::size_t i = 0; i < stems.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += stems[i];
  }
  return out;
}

TermKey normalize_term(std::span<const std::string> words,
                       const StopwordSet& stopwords, std::size_t max_len) {
  if (words.empty()) {
    throw Error(ErrorCode::empty_term, "term has no words");
  }
  if (words.size() > max_len) {
    throw Error(ErrorCode::term_too_long,
                "term exceeds max length " + std::to_string(max_len));
  }
  TermKey key;
  key.stems.reserve(words.size());
  for (const auto& word : words) {
    std::string lower = word;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (stopwords.contains(lower)) {
      throw Error(ErrorCode::contains_stopword,
                  "term contains stopword: " + lower);
    }
    key.stems.push_back(porter_stem(lower));
  }
  return key;
}

}  // namespace termite
