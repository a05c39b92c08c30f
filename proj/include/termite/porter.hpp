#ifndef TERMITE_PORTER_HPP
#define TERMITE_PORTER_HPP

#include <string>

namespace termite {

// Porter's suffix-stripping algorithm (Program 14(3), 1980), following the
// author's reference implementation: words of length <= 2 are returned
// unchanged, step 2 uses the bli->ble and logi->log rules.
// Input is expected lowercased; non-letter characters count as consonants.
std::string porter_stem(const std::string& word);

}  // namespace termite

#endif  // TERMITE_PORTER_HPP
