#include "termite/stopwords.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "termite/error.hpp"

namespace termite {

extern const char* const kBuiltinStopwords;  // generated from data/stopwords.txt

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

StopwordSet parse(std::istream& in) {
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::transform(line.begin(), line.end(), line.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    set.insert(std::move(line));
  }
  return set;
}

}  // namespace

const StopwordSet& StopwordSet::builtin() {
  static const StopwordSet set = [] {
    std::istringstream in(kBuiltinStopwords);
    return parse(in);
  }();
  return set;
}

StopwordSet StopwordSet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::missing_file,
                "cannot open stopword file: " + path.string());
  }
  return parse(in);
}

}  // namespace termite
