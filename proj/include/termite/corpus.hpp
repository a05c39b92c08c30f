#ifndef TERMITE_CORPUS_HPP
#define TERMITE_CORPUS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "termite/stopwords.hpp"
#include "termite/tokenize.hpp"

namespace termite {

enum class CorpusRole { target, contrastive };

struct Document {
  std::string id;    // path relative to the corpus directory
  std::string text;  // sanitized UTF-8
  std::vector<Token> tokens;

  std::size_t token_count() const { return tokens.size(); }
};

struct Corpus {
  std::string name;
  CorpusRole role = CorpusRole::target;
  std::vector<Document> documents;
};

// One document per matching file, ids relative to dir_path, lexicographic
// order. Subdirectories are included.
Corpus load_corpus(const std::filesystem::path& dir_path, std::string name,
                   CorpusRole role, const std::string& extension = ".txt");

void tokenize_corpus(Corpus& corpus, const StopwordSet& stopwords);

}  // namespace termite

#endif  // TERMITE_CORPUS_HPP
