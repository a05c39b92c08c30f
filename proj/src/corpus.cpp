#include "termite/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "termite/error.hpp"

namespace fs = std::filesystem;

namespace termite {

Corpus load_corpus(const fs::path& dir_path, std::string name, CorpusRole role,
                   const std::string& extension) {
  if (!fs::is_directory(dir_path)) {
    throw Error(ErrorCode::missing_directory,
                "corpus directory does not exist: " + dir_path.string());
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir_path)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw Error(ErrorCode::empty_corpus,
                "no '" + extension + "' files under " + dir_path.string());
  }

  Corpus corpus;
  corpus.name = std::move(name);
  corpus.role = role;
  corpus.documents.reserve(files.size());
  for (auto& file : files) {
    Document doc;
    doc.id = file.lexically_relative(dir_path).generic_string();
    corpus.documents.push_back(std::move(doc));
  }
  std::sort(corpus.documents.begin(), corpus.documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });

  for (auto& doc : corpus.documents) {
    std::ifstream in(dir_path / fs::path(doc.id), std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::io_failure, "cannot read " + doc.id);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
      throw Error(ErrorCode::io_failure, "read failure on " + doc.id);
    }
    doc.text = sanitize_utf8(buffer.str());
  }
  return corpus;
}

void tokenize_corpus(Corpus& corpus, const StopwordSet& stopwords) {
  for (auto& doc : corpus.documents) {
    doc.tokens = tokenize(doc.text, stopwords);
  }
}

}  // namespace termite
