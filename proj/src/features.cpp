#include "termite/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "termite/error.hpp"
#include "termite/porter.hpp"

namespace termite {

std::size_t FrequencyModel::index_of(const TermKey& key) const {
  auto it = key_index_.find(key.joined());
  if (it == key_index_.end()) {
    throw Error(ErrorCode::unknown_term, "not a candidate: " + key.joined());
  }
  return it->second;
}

void FrequencyModel::reindex() {
  key_index_.clear();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    key_index_.emplace(keys[i].joined(), i);
  }
}

FrequencyModel build_frequency_model(const Corpus& target,
                                     std::span<const Corpus> contrastive,
                                     std::span<const CandidateTerm> candidates,
                                     std::size_t max_len) {
  FrequencyModel m;
  const std::size_t n = candidates.size();
  m.keys.reserve(n);
  m.target_freq.reserve(n);
  m.doc_freq.resize(n);
  m.first_positions.resize(n);

  std::unordered_map<std::string, std::size_t> doc_index;
  for (const auto& doc : target.documents) {
    doc_index.emplace(doc.id, m.target_doc_ids.size());
    m.target_doc_ids.push_back(doc.id);
    m.target_doc_token_counts.push_back(doc.token_count());
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& candidate = candidates[i];
    m.keys.push_back(candidate.key);
    m.target_freq.push_back(candidate.frequency());
    m.target_mass += candidate.frequency();

    // occurrences arrive sorted by (doc_id, position)
    for (const auto& occ : candidate.occurrences) {
      std::size_t d = doc_index.at(occ.doc_id);
      auto& per_doc = m.doc_freq[i];
      if (!per_doc.empty() && per_doc.back().first == d) {
        ++per_doc.back().second;
      } else {
        per_doc.emplace_back(d, 1);
        m.first_positions[i].emplace_back(d, occ.first_word_position);
      }
    }
  }
  m.reindex();

  for (const auto& corpus : contrastive) {
    std::vector<std::int64_t> freq(n, 0);
    std::int64_t mass = 0;
    for (const auto& doc : corpus.documents) {
      for (const auto& e : generate_candidates(doc, max_len)) {
        auto it = m.key_index_.find(e.key.joined());
        if (it != m.key_index_.end()) {
          ++freq[it->second];
          ++mass;
        }
      }
    }
    m.contrastive_names.push_back(corpus.name);
    m.contrastive_freq.push_back(std::move(freq));
    m.contrastive_mass.push_back(mass);
  }

  std::unordered_map<std::string, std::string> stem_cache;
  for (const auto& doc : target.documents) {
    for (const auto& token : doc.tokens) {
      if (token.is_stopword) continue;
      auto [it, inserted] = stem_cache.try_emplace(token.surface);
      if (inserted) it->second = porter_stem(token.surface);
      ++m.word_freq[it->second];
    }
  }
  return m;
}

double domain_relevance(const TermKey& t, const FrequencyModel& m) {
  std::size_t i = m.index_of(t);
  double p_target =
      m.target_mass > 0
          ? static_cast<double>(m.target_freq[i]) / static_cast<double>(m.target_mass)
          : 0.0;
  double p_max = p_target;
  for (std::size_t k = 0; k < m.contrastive_freq.size(); ++k) {
    if (m.contrastive_mass[k] == 0) continue;
    double p = static_cast<double>(m.contrastive_freq[k][i]) /
               static_cast<double>(m.contrastive_mass[k]);
    p_max = std::max(p_max, p);
  }
  return p_max > 0.0 ? p_target / p_max : 1.0;
}

double domain_consensus(const TermKey& t, const FrequencyModel& m) {
  std::size_t i = m.index_of(t);
  const double total = static_cast<double>(m.target_freq[i]);
  double entropy = 0.0;
  for (const auto& [doc, freq] : m.doc_freq[i]) {
    double phi = static_cast<double>(freq) / total;
    entropy += phi * std::log2(1.0 / phi);
  }
  return entropy;
}

double term_cohesion(const TermKey& t, const FrequencyModel& m) {
  std::size_t i = m.index_of(t);
  const double freq = static_cast<double>(m.target_freq[i]);
  double word_freq_sum = 0.0;
  for (const auto& stem : t.stems) {
    auto it = m.word_freq.find(stem);
    word_freq_sum += it != m.word_freq.end() ? static_cast<double>(it->second) : 0.0;
  }
  if (word_freq_sum <= 0.0) return 0.0;
  return static_cast<double>(t.length()) * freq * std::log10(freq) / word_freq_sum;
}

double first_occurrence(const TermKey& t, const FrequencyModel& m) {
  std::size_t i = m.index_of(t);
  double ratio_sum = 0.0;
  for (const auto& [doc, pos] : m.first_positions[i]) {
    ratio_sum += static_cast<double>(pos) /
                 static_cast<double>(m.target_doc_token_counts[doc]);
  }
  return 1.0 - ratio_sum / static_cast<double>(m.first_positions[i].size());
}

double np_length_score(const TermKey& t, const FrequencyModel& m) {
  std::size_t i = m.index_of(t);
  return static_cast<double>(m.target_freq[i]) * static_cast<double>(t.length());
}

FeatureMatrix feature_matrix(std::span<const CandidateTerm> candidates,
                             const FrequencyModel& m) {
  if (candidates.empty()) {
    throw Error(ErrorCode::no_candidates, "no candidates to score");
  }
  FeatureMatrix matrix;
  matrix.keys.reserve(candidates.size());
  matrix.rows.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    const TermKey& t = candidate.key;
    FeatureVector fv;
    fv.raw = {domain_relevance(t, m), domain_consensus(t, m),
              term_cohesion(t, m), first_occurrence(t, m),
              np_length_score(t, m)};
    matrix.keys.push_back(t);
    matrix.rows.push_back(fv);
  }

  for (std::size_t f = 0; f < 5; ++f) {
    double lo = matrix.rows.front().raw[f];
    double hi = lo;
    for (const auto& row : matrix.rows) {
      lo = std::min(lo, row.raw[f]);
      hi = std::max(hi, row.raw[f]);
    }
    for (auto& row : matrix.rows) {
      row.normalized[f] = hi > lo ? (row.raw[f] - lo) / (hi - lo) : 0.0;
    }
  }
  return matrix;
}

void write_feature_matrix(std::ostream& out, const FeatureMatrix& matrix) {
  out << "# term\tdr\tdc\ttc\tfirst_occ\tlength\t"
         "dr_n\tdc_n\ttc_n\tfirst_occ_n\tlength_n\n";
  char buf[32];
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << matrix.keys[i].joined();
    for (double v : matrix.rows[i].raw) {
      std::snprintf(buf, sizeof(buf), "%.6f", v);
      out << '\t' << buf;
    }
    for (double v : matrix.rows[i].normalized) {
      std::snprintf(buf, sizeof(buf), "%.6f", v);
      out << '\t' << buf;
    }
    out << '\n';
  }
}

}  // namespace termite
