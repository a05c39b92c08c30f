#include "termite/candidates.hpp"

#include <algorithm>
#include <map>

#include "termite/error.hpp"
#include "termite/porter.hpp"

namespace termite {

std::vector<Emission> generate_candidates(const Document& doc,
                                          std::size_t max_len) {
  std::vector<Emission> emissions;
  const auto& tokens = doc.tokens;
  const std::size_t n = tokens.size();

  // Stems computed once per token, shared by all n-grams covering it.
  std::vector<std::string> stems(n);

  std::size_t chunk_begin = 0;
  auto emit_chunk = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      stems[i] = porter_stem(tokens[i].surface);
    }
    for (std::size_t start = begin; start < end; ++start) {
      std::size_t longest = std::min(max_len, end - start);
      for (std::size_t len = 1; len <= longest; ++len) {
        Emission e;
        e.key.stems.assign(stems.begin() + start, stems.begin() + start + len);
        e.occurrence = {doc.id, tokens[start].position};
        for (std::size_t i = start; i < start + len; ++i) {
          if (i > start) e.surface.push_back(' ');
          e.surface += tokens[i].surface;
        }
        emissions.push_back(std::move(e));
      }
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (tokens[i].is_stopword) {
      emit_chunk(chunk_begin, i);
      chunk_begin = i + 1;
    } else if (tokens[i].follows_break && i > chunk_begin) {
      emit_chunk(chunk_begin, i);
      chunk_begin = i;
    }
  }
  emit_chunk(chunk_begin, n);
  return emissions;
}

std::vector<CandidateTerm> build_candidate_set(const Corpus& target,
                                               std::size_t max_len,
                                               std::int64_t min_freq) {
  std::map<TermKey, CandidateTerm> merged;
  for (const auto& doc : target.documents) {
    for (auto& e : generate_candidates(doc, max_len)) {
      auto& candidate = merged[e.key];
      if (candidate.key.stems.empty()) candidate.key = e.key;
      candidate.surface_forms.insert(std::move(e.surface));
      candidate.occurrences.push_back(std::move(e.occurrence));
    }
  }

  std::vector<CandidateTerm> result;
  for (auto& [key, candidate] : merged) {
    if (candidate.frequency() < min_freq) continue;
    std::sort(candidate.occurrences.begin(), candidate.occurrences.end());
    result.push_back(std::move(candidate));
  }
  if (result.empty()) {
    throw Error(ErrorCode::no_candidates, "candidate set is empty");
  }
  return result;
}

}  // namespace termite
