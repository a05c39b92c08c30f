#ifndef TERMITE_STOPWORDS_HPP
#define TERMITE_STOPWORDS_HPP

#include <filesystem>
#include <string>
#include <unordered_set>

namespace termite {

class StopwordSet {
 public:
  StopwordSet() = default;

  // Compiled-in copy of data/stopwords.txt.
  static const StopwordSet& builtin();

  // One lowercase word per line; '#' starts a comment, blank lines ignored.
  static StopwordSet from_file(const std::filesystem::path& path);

  bool contains(const std::string& word) const {
    return words_.count(word) != 0;
  }
  std::size_t size() const { return words_.size(); }
  void insert(std::string word) { words_.insert(std::move(word)); }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace termite

#endif  // TERMITE_STOPWORDS_HPP
