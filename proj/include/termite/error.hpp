#ifndef TERMITE_ERROR_HPP
#define TERMITE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace termite {

enum class ErrorCode {
  missing_directory,
  empty_corpus,
  io_failure,
  missing_file,
  empty_term,
  term_too_long,
  contains_stopword,
  no_candidates,
  unknown_term,
  no_contrastive_corpora,
  invalid_config,
  empty_gold_standard,
  k_too_large,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace termite

#endif  // TERMITE_ERROR_HPP
