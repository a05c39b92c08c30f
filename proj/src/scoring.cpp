#include "termite/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "termite/error.hpp"

namespace termite {
namespace {

RankedTermList ranked_from_scores(std::span<const TermKey> keys,
                                  std::span<const double> scores,
                                  std::string method) {
  if (keys.empty()) {
    throw Error(ErrorCode::no_candidates, "nothing to rank");
  }
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return keys[a] < keys[b];
  });

  RankedTermList list;
  list.method = std::move(method);
  list.entries.reserve(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    list.entries.push_back({i + 1, keys[order[i]], scores[order[i]]});
  }
  return list;
}

std::vector<double> min_max_normalize(std::vector<double> values) {
  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it;
  double hi = *hi_it;
  for (double& v : values) {
    v = hi > lo ? (v - lo) / (hi - lo) : 0.0;
  }
  return values;
}

std::vector<double> weirdness_scores(const FrequencyModel& m) {
  if (m.contrastive_freq.empty()) {
    throw Error(ErrorCode::no_contrastive_corpora,
                "weirdness needs at least one contrastive corpus");
  }
  std::int64_t pooled_mass = 0;
  for (std::int64_t mass : m.contrastive_mass) pooled_mass += mass;

  std::vector<double> scores(m.keys.size());
  for (std::size_t i = 0; i < m.keys.size(); ++i) {
    std::int64_t pooled_freq = 0;
    for (const auto& domain : m.contrastive_freq) pooled_freq += domain[i];
    scores[i] =
        weirdness_score(m.target_freq[i], m.target_mass, pooled_freq, pooled_mass);
  }
  return scores;
}

}  // namespace

double score_term(const FeatureVector& fv, const Vec5& weights) {
  return std::inner_product(weights.begin(), weights.end(),
                            fv.normalized.begin(), 0.0);
}

RankedTermList rank_by_weights(const FeatureMatrix& features,
                               const Vec5& weights, std::string method) {
  std::vector<double> scores(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    scores[i] = score_term(features.rows[i], weights);
  }
  return ranked_from_scores(features.keys, scores, std::move(method));
}

RankedTermList rank_tfidf(std::span<const CandidateTerm> candidates,
                          const Corpus& target,
                          std::span<const Corpus> contrastive,
                          std::size_t max_len) {
  if (candidates.empty()) {
    throw Error(ErrorCode::no_candidates, "nothing to rank");
  }
  std::unordered_map<std::string, std::size_t> key_index;
  std::vector<TermKey> keys;
  keys.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    key_index.emplace(candidates[i].key.joined(), i);
    keys.push_back(candidates[i].key);
  }

  std::vector<std::int64_t> df(candidates.size(), 0);
  std::size_t total_docs = target.documents.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::unordered_set<std::string> docs;
    for (const auto& occ : candidates[i].occurrences) docs.insert(occ.doc_id);
    df[i] = static_cast<std::int64_t>(docs.size());
  }
  for (const auto& corpus : contrastive) {
    total_docs += corpus.documents.size();
    for (const auto& doc : corpus.documents) {
      std::unordered_set<std::size_t> seen;
      for (const auto& e : generate_candidates(doc, max_len)) {
        auto it = key_index.find(e.key.joined());
        if (it != key_index.end()) seen.insert(it->second);
      }
      for (std::size_t i : seen) ++df[i];
    }
  }

  std::vector<double> scores(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double idf = std::log(static_cast<double>(total_docs) /
                          static_cast<double>(df[i]));
    scores[i] = static_cast<double>(candidates[i].frequency()) * idf;
  }
  return ranked_from_scores(keys, scores, "TFIDF");
}

double weirdness_score(std::int64_t target_freq, std::int64_t target_mass,
                       std::int64_t contrastive_freq,
                       std::int64_t contrastive_mass) {
  if (target_mass <= 0 || target_freq <= 0) return 0.0;
  double p_target = static_cast<double>(target_freq) /
                    static_cast<double>(target_mass);
  double p_contrastive = static_cast<double>(contrastive_freq + 1) /
                         static_cast<double>(contrastive_mass + 1);
  return p_target / p_contrastive;
}

RankedTermList rank_weirdness(const FrequencyModel& m) {
  std::vector<double> scores = weirdness_scores(m);
  return ranked_from_scores(m.keys, scores, "Weirdness");
}

RankedTermList rank_glossary(const FeatureMatrix& features,
                             const FrequencyModel& m) {
  std::vector<double> weirdness = min_max_normalize(weirdness_scores(m));
  std::vector<double> scores(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    scores[i] = 0.5 * weirdness[i] + 0.5 * features.rows[i].normalized[2];
  }
  return ranked_from_scores(features.keys, scores, "GlossaryExtraction");
}

RankedTermList rank_termextractor(const FeatureMatrix& features) {
  std::vector<double> scores(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    const auto& n = features.rows[i].normalized;
    scores[i] = (n[0] + n[1] + n[2]) / 3.0;
  }
  return ranked_from_scores(features.keys, scores, "TermExtractor");
}

void write_ranked_list(std::ostream& out, const RankedTermList& list,
                       const std::string& config_echo, std::size_t top_n) {
  out << "# method: " << list.method << '\n';
  if (!config_echo.empty()) {
    out << "# config: " << config_echo << '\n';
  }
  std::size_t limit = top_n > 0 ? std::min(top_n, list.entries.size())
                                : list.entries.size();
  char buf[32];
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& e = list.entries[i];
    std::snprintf(buf, sizeof(buf), "%.6f", e.score);
    out << e.rank << '\t' << e.key.joined() << '\t' << buf << '\n';
  }
}

RankedTermList read_ranked_list(std::istream& in, const std::string& source) {
  RankedTermList list;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::parse_error,
                 source + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string method_prefix = "# method: ";
      if (line.rfind(method_prefix, 0) == 0) {
        list.method = line.substr(method_prefix.size());
      }
      continue;
    }
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw fail("expected three tab-separated fields");
    }
    RankedEntry entry;
    try {
      entry.rank = std::stoul(line.substr(0, tab1));
      entry.score = std::stod(line.substr(tab2 + 1));
    } catch (const std::exception&) {
      throw fail("malformed rank or score");
    }
    if (entry.rank != list.entries.size() + 1) {
      throw fail("ranks must be contiguous from 1");
    }
    std::istringstream words(line.substr(tab1 + 1, tab2 - tab1 - 1));
    std::string stem;
    while (words >> stem) entry.key.stems.push_back(stem);
    if (entry.key.stems.empty()) {
      throw fail("empty term");
    }
    list.entries.push_back(std::move(entry));
  }
  if (list.entries.empty()) {
    throw fail("no entries");
  }
  return list;
}

}  // namespace termite
