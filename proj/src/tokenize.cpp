#include "termite/tokenize.hpp"

#include <algorithm>
#include <cctype>

namespace termite {
namespace {

bool is_ascii_alnum(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool is_word_byte(unsigned char c) { return is_ascii_alnum(c) || c >= 0x80; }

bool is_sentence_boundary(unsigned char c) {
  return c == '.' || c == '!' || c == '?' || c == ';' || c == ':';
}

bool all_digits(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c >= '0' && c <= '9';
  });
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, const StopwordSet& stopwords) {
  std::vector<Token> tokens;
  std::string current;
  bool pending_break = false;
  std::size_t position = 0;

  auto flush = [&] {
    if (current.empty()) return;
    if (!all_digits(current)) {
      Token t;
      t.surface = std::move(current);
      t.position = position++;
      t.is_stopword = stopwords.contains(t.surface);
      t.follows_break = pending_break;
      tokens.push_back(std::move(t));
      pending_break = false;
    }
    current.clear();
  };

  const std::size_t n = text.size();
  for (std::size_t i = 0; i < n; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    bool keep;
    if (is_word_byte(c)) {
      keep = true;
    } else if (c == '\'' || c == '-') {
      // word-internal only: alphanumeric neighbours on both sides
      keep = i > 0 && i + 1 < n &&
             is_word_byte(static_cast<unsigned char>(text[i - 1])) &&
             is_word_byte(static_cast<unsigned char>(text[i + 1]));
    } else {
      keep = false;
    }
    if (keep) {
      current.push_back(c < 0x80
                            ? static_cast<char>(std::tolower(c))
                            : static_cast<char>(c));
    } else {
      flush();
      if (is_sentence_boundary(c)) pending_break = true;
    }
  }
  flush();
  return tokens;
}

std::string sanitize_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len;
    if (c < 0x80) {
      len = 1;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      len = 4;
    } else {
      out.push_back(' ');
      ++i;
      continue;
    }
    if (i + len > n) {
      out.push_back(' ');
      ++i;
      continue;
    }
    bool valid = true;
    for (std::size_t s = 1; s < len; ++s) {
      if ((static_cast<unsigned char>(text[i + s]) & 0xC0) != 0x80) {
        valid = false;
        break;
      }
    }
    if (valid) {
      out.append(text.substr(i, len));
      i += len;
    } else {
      out.push_back(' ');
      ++i;
    }
  }
  return out;
}

}  // namespace termite
