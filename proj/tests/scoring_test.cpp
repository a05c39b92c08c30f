#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "support/synth.hpp"
#include "termite/error.hpp"
#include "termite/scoring.hpp"

using namespace termite;

namespace {

const StopwordSet& sw() { return StopwordSet::builtin(); }

Document make_doc(const std::string& id, const std::string& text) {
  Document doc;
  doc.id = id;
  doc.text = text;
  doc.tokens = tokenize(text, sw());
  return doc;
}

Corpus corpus_of(std::string name, CorpusRole role, std::vector<Document> docs) {
  Corpus c;
  c.name = std::move(name);
  c.role = role;
  c.documents = std::move(docs);
  return c;
}

FeatureMatrix toy_matrix(const std::vector<std::array<double, 5>>& rows) {
  FeatureMatrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    TermKey key;
    key.stems = {"t" + std::to_string(i)};
    m.keys.push_back(key);
    FeatureVector fv;
    fv.normalized = rows[i];
    m.rows.push_back(fv);
  }
  return m;
}

}  // namespace

TEST_CASE("score_term: weighted sum of normalized features") {
  FeatureVector fv;
  fv.normalized = {1.0, 0.4, 0.9, 0.2, 0.7};

  Vec5 e1{1, 0, 0, 0, 0};
  CHECK(score_term(fv, e1) == 1.0);

  Vec5 zero{};
  CHECK(score_term(fv, zero) == 0.0);

  Vec5 half{0.5, 0.5, 0, 0, 0};
  CHECK(score_term(fv, half) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("rank_swarm: ties fall back to term order") {
  FeatureMatrix m = toy_matrix({{0.9, 0, 0, 0, 0},
                                {0.9, 0, 0, 0, 0},
                                {0.1, 0, 0, 0, 0}});
  Vec5 e1{1, 0, 0, 0, 0};
  RankedTermList list = rank_swarm(m, e1);
  CHECK(list.method == "swarm");
  REQUIRE(list.entries.size() == 3);
  CHECK(list.entries[0].key.joined() == "t0");
  CHECK(list.entries[1].key.joined() == "t1");
  CHECK(list.entries[2].key.joined() == "t2");
  CHECK(list.entries[0].rank == 1);
  CHECK(list.entries[2].rank == 3);
}

TEST_CASE("rank_by_weights: one-hot weights reproduce the feature order") {
  std::mt19937_64 rng(8);
  std::vector<std::array<double, 5>> rows;
  for (int i = 0; i < 50; ++i) {
    std::array<double, 5> row;
    for (double& v : row) v = uniform01(rng);
    rows.push_back(row);
  }
  FeatureMatrix m = toy_matrix(rows);
  for (int f = 0; f < 5; ++f) {
    Vec5 one_hot{};
    one_hot[f] = 1.0;
    RankedTermList list = rank_by_weights(m, one_hot, "f");
    for (std::size_t i = 1; i < list.entries.size(); ++i) {
      CHECK(list.entries[i - 1].score >= list.entries[i].score);
    }
    // the top entry carries the maximal feature value
    double best = -1;
    for (const auto& row : rows) best = std::max(best, row[f]);
    CHECK(list.entries[0].score == best);
  }
}

TEST_CASE("rank_by_weights: positive scaling leaves the order unchanged") {
  std::mt19937_64 rng(9);
  std::vector<std::array<double, 5>> rows;
  for (int i = 0; i < 40; ++i) {
    std::array<double, 5> row;
    for (double& v : row) v = uniform01(rng);
    rows.push_back(row);
  }
  FeatureMatrix m = toy_matrix(rows);
  Vec5 w{0.2, 0.4, 0.1, 0.8, 0.3};
  Vec5 scaled;
  for (int d = 0; d < 5; ++d) scaled[d] = 3.5 * w[d];

  RankedTermList a = rank_by_weights(m, w, "a");
  RankedTermList b = rank_by_weights(m, scaled, "b");
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].key == b.entries[i].key);
  }
}

TEST_CASE("rank_by_weights: input order does not matter") {
  testsupport::SynthConfig cfg;
  cfg.seed = 55;
  Corpus target = testsupport::synth_corpus("t", CorpusRole::target, cfg, sw());
  auto candidates = build_candidate_set(target, 3, 1);
  FrequencyModel model = build_frequency_model(target, {}, candidates, 3);
  FeatureMatrix matrix = feature_matrix(candidates, model);

  Vec5 w{0.5, 0.1, 0.7, 0.2, 0.9};
  RankedTermList a = rank_by_weights(matrix, w, "x");

  // permute rows and keys together
  FeatureMatrix permuted = matrix;
  std::reverse(permuted.keys.begin(), permuted.keys.end());
  std::reverse(permuted.rows.begin(), permuted.rows.end());
  RankedTermList b = rank_by_weights(permuted, w, "x");

  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].key == b.entries[i].key);
    CHECK(a.entries[i].score == b.entries[i].score);
  }
}

TEST_CASE("rank_tfidf: hand-checked scores") {
  // target: 2 docs, contrastive: 2 docs -> N = 4
  Corpus target = corpus_of("t", CorpusRole::target,
                            {make_doc("a.txt", "prayer. prayer. alms"),
                             make_doc("b.txt", "prayer. fasting")});
  Corpus news = corpus_of("n", CorpusRole::contrastive,
                          {make_doc("x.txt", "fasting. market"),
                           make_doc("y.txt", "market")});
  auto candidates = build_candidate_set(target, 4, 1);
  std::vector<Corpus> contrastive{news};
  RankedTermList list = rank_tfidf(candidates, target, contrastive, 4);

  auto score_of = [&](const std::string& stem) {
    for (const auto& e : list.entries) {
      if (e.key.joined() == stem) return e.score;
    }
    FAIL("missing term");
    return 0.0;
  };
  // prayer: tf 3, df 2 -> 3 ln 2;  alms: tf 1, df 1 -> ln 4
  // fasting: tf 1, df 2 (one target + one contrastive doc) -> ln 2
  CHECK(score_of("prayer") == doctest::Approx(3 * std::log(2.0)).epsilon(1e-12));
  CHECK(score_of("alm") == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(score_of("fast") == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(list.entries[0].key.joined() == "prayer");
}

TEST_CASE("rank_tfidf: term in every document scores zero") {
  Corpus target = corpus_of("t", CorpusRole::target,
                            {make_doc("a.txt", "prayer"),
                             make_doc("b.txt", "prayer")});
  auto candidates = build_candidate_set(target, 4, 1);
  RankedTermList list = rank_tfidf(candidates, target, {}, 4);
  REQUIRE(list.entries.size() == 1);
  CHECK(list.entries[0].score == 0.0);
}

TEST_CASE("weirdness_score: add-one smoothing") {
  // 4/100 in target, 0/999 pooled contrastive -> 0.04 / (1/1000) = 40
  CHECK(weirdness_score(4, 100, 0, 999) == doctest::Approx(40.0).epsilon(1e-12));
  // equal normalized frequencies stay near one
  CHECK(weirdness_score(10, 100, 999, 9999) ==
        doctest::Approx(1.0).epsilon(1e-3));
  // absent from the target
  CHECK(weirdness_score(0, 100, 5, 100) == 0.0);
}

TEST_CASE("rank_weirdness: needs a contrastive corpus") {
  Corpus target =
      corpus_of("t", CorpusRole::target, {make_doc("a.txt", "prayer")});
  auto candidates = build_candidate_set(target, 4, 1);
  FrequencyModel m = build_frequency_model(target, {}, candidates, 4);
  CHECK_THROWS_AS(rank_weirdness(m), Error);
}

TEST_CASE("rank_weirdness: domain-specific terms first") {
  Corpus target = corpus_of("t", CorpusRole::target,
                            {make_doc("a.txt", "prayer. prayer. market")});
  Corpus news = corpus_of("n", CorpusRole::contrastive,
                          {make_doc("x.txt", "market. market. market")});
  auto candidates = build_candidate_set(target, 4, 1);
  std::vector<Corpus> contrastive{news};
  FrequencyModel m = build_frequency_model(target, contrastive, candidates, 4);
  RankedTermList list = rank_weirdness(m);
  CHECK(list.method == "Weirdness");
  CHECK(list.entries[0].key.joined() == "prayer");
}

TEST_CASE("rank_glossary and rank_termextractor: equal-weight mixes") {
  FeatureMatrix m = toy_matrix({{1.0, 1.0, 1.0, 0, 0},
                                {0.0, 0.0, 0.0, 0, 0},
                                {0.9, 0.6, 0.3, 0, 0}});
  RankedTermList te = rank_termextractor(m);
  CHECK(te.method == "TermExtractor");
  auto score_of = [&](const RankedTermList& list, const std::string& stem) {
    for (const auto& e : list.entries) {
      if (e.key.joined() == stem) return e.score;
    }
    FAIL("missing term");
    return 0.0;
  };
  CHECK(score_of(te, "t0") == 1.0);
  CHECK(score_of(te, "t1") == 0.0);
  CHECK(score_of(te, "t2") == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("rank_glossary: equal mix of weirdness and cohesion") {
  Corpus target = corpus_of(
      "t", CorpusRole::target,
      {make_doc("a.txt", "prayer. prayer. prayer. market. market. alms")});
  Corpus news = corpus_of("n", CorpusRole::contrastive,
                          {make_doc("x.txt", "market. market")});
  auto candidates = build_candidate_set(target, 4, 1);
  std::vector<Corpus> contrastive{news};
  FrequencyModel m = build_frequency_model(target, contrastive, candidates, 4);
  FeatureMatrix matrix = feature_matrix(candidates, m);
  RankedTermList list = rank_glossary(matrix, m);
  CHECK(list.method == "GlossaryExtraction");
  REQUIRE(list.entries.size() == 3);
  // prayer is both weird (absent from news) and cohesive (frequency 3)
  CHECK(list.entries[0].key.joined() == "prayer");
  CHECK(list.entries[0].score == 1.0);
}

TEST_CASE("ranked list files: round trip") {
  FeatureMatrix m = toy_matrix({{0.9, 0, 0, 0, 0},
                                {0.5, 0, 0, 0, 0},
                                {0.125, 0, 0, 0, 0}});
  Vec5 e1{1, 0, 0, 0, 0};
  RankedTermList list = rank_swarm(m, e1);

  std::stringstream file;
  write_ranked_list(file, list, "{\"cmd\":\"test\"}");
  RankedTermList parsed = read_ranked_list(file, "mem");
  CHECK(parsed.method == "swarm");
  REQUIRE(parsed.entries.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(parsed.entries[i].key == list.entries[i].key);
    CHECK(parsed.entries[i].rank == list.entries[i].rank);
    CHECK(parsed.entries[i].score ==
          doctest::Approx(list.entries[i].score).epsilon(1e-6));
  }
}

TEST_CASE("ranked list files: top_n truncation") {
  FeatureMatrix m = toy_matrix({{0.9, 0, 0, 0, 0},
                                {0.5, 0, 0, 0, 0},
                                {0.1, 0, 0, 0, 0}});
  Vec5 e1{1, 0, 0, 0, 0};
  std::stringstream file;
  write_ranked_list(file, rank_swarm(m, e1), "", 2);
  RankedTermList parsed = read_ranked_list(file, "mem");
  CHECK(parsed.entries.size() == 2);
}

TEST_CASE("ranked list files: parse errors name the line") {
  std::stringstream file("# method: x\n1\tgood term\t0.5\nbroken line\n");
  try {
    read_ranked_list(file, "list.txt");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("list.txt:3") != std::string::npos);
  }
}
