#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "support/synth.hpp"
#include "termite/candidates.hpp"
#include "termite/error.hpp"

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

Corpus corpus_of(std::vector<Document> docs) {
  Corpus c;
  c.name = "toy";
  c.role = CorpusRole::target;
  c.documents = std::move(docs);
  return c;
}

}  // namespace

TEST_CASE("normalize_term: lowercases and stems") {
  std::vector<std::string> words = {"Ritual", "Prayers"};
  TermKey key = normalize_term(words, sw(), 4);
  CHECK(key.stems == std::vector<std::string>{"ritual", "prayer"});
  CHECK(key.joined() == "ritual prayer");
}

TEST_CASE("normalize_term: single word") {
  std::vector<std::string> words = {"prayer"};
  CHECK(normalize_term(words, sw(), 4).stems ==
        std::vector<std::string>{"prayer"});
}

TEST_CASE("normalize_term: error cases") {
  std::vector<std::string> with_stop = {"the", "prayer"};
  std::vector<std::string> empty;
  std::vector<std::string> long_term = {"a1", "b2", "c3", "d4", "e5"};
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::parse_error;
  };
  CHECK(code([&] { normalize_term(with_stop, sw(), 4); }) ==
        ErrorCode::contains_stopword);
  CHECK(code([&] { normalize_term(empty, sw(), 4); }) == ErrorCode::empty_term);
  CHECK(code([&] { normalize_term(long_term, sw(), 4); }) ==
        ErrorCode::term_too_long);
}

TEST_CASE("generate_candidates: chunks break at stopwords") {
  Document doc = make_doc("d", "The ritual prayer");
  auto emissions = generate_candidates(doc, 4);
  REQUIRE(emissions.size() == 3);

  std::map<std::string, std::size_t> at;
  for (const auto& e : emissions) at[e.key.joined()] = e.occurrence.first_word_position;
  CHECK(at.at("ritual") == 1);
  CHECK(at.at("prayer") == 2);
  CHECK(at.at("ritual prayer") == 1);
}

TEST_CASE("generate_candidates: all stopwords means nothing") {
  Document doc = make_doc("d", "the of and to in");
  CHECK(generate_candidates(doc, 4).empty());
}

TEST_CASE("generate_candidates: n-gram count of a chunk") {
  // 3 content words, max_len 2: 3 unigrams + 2 bigrams
  Document doc = make_doc("d", "stone river mountain");
  CHECK(generate_candidates(doc, 2).size() == 5);
  // max_len 4 caps at chunk length: 3 + 2 + 1
  CHECK(generate_candidates(doc, 4).size() == 6);
}

TEST_CASE("generate_candidates: sentence boundaries break chunks") {
  Document doc = make_doc("d", "stone river. mountain");
  auto emissions = generate_candidates(doc, 4);
  // [stone river] [mountain]: 2+1 unigrams, 1 bigram
  CHECK(emissions.size() == 4);
  for (const auto& e : emissions) {
    CHECK(e.key.joined() != "river mountain");
  }
}

TEST_CASE("generate_candidates: emission count formula on random docs") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 25; ++round) {
    testsupport::SynthConfig cfg;
    cfg.num_docs = 1;
    cfg.seed = rng();
    Corpus corpus = testsupport::synth_corpus("t", CorpusRole::target, cfg, sw());
    const Document& doc = corpus.documents[0];
    const std::size_t max_len = 1 + round % 5;

    // chunk lengths derived independently from the token flags
    std::vector<std::size_t> chunk_lengths;
    std::size_t run = 0;
    for (const auto& t : doc.tokens) {
      if (t.is_stopword) {
        if (run > 0) chunk_lengths.push_back(run);
        run = 0;
      } else {
        if (t.follows_break && run > 0) {
          chunk_lengths.push_back(run);
          run = 0;
        }
        ++run;
      }
    }
    if (run > 0) chunk_lengths.push_back(run);

    std::size_t expected = 0;
    for (std::size_t len : chunk_lengths) {
      for (std::size_t n = 1; n <= std::min(len, max_len); ++n) {
        expected += len - n + 1;
      }
    }
    CHECK(generate_candidates(doc, max_len).size() == expected);
  }
}

TEST_CASE("generate_candidates: occurrences stay inside the document") {
  testsupport::SynthConfig cfg;
  cfg.seed = 99;
  Corpus corpus = testsupport::synth_corpus("t", CorpusRole::target, cfg, sw());
  for (const auto& doc : corpus.documents) {
    for (const auto& e : generate_candidates(doc, 4)) {
      CHECK(e.occurrence.first_word_position + e.key.length() <=
            doc.token_count());
    }
  }
}

TEST_CASE("build_candidate_set: merges across documents") {
  Corpus corpus = corpus_of({make_doc("a.txt", "the prayer"),
                             make_doc("b.txt", "a prayer")});
  auto candidates = build_candidate_set(corpus, 4, 1);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].key.joined() == "prayer");
  CHECK(candidates[0].frequency() == 2);
  CHECK(candidates[0].occurrences.size() == 2);
}

TEST_CASE("build_candidate_set: min_freq filters hapaxes") {
  Corpus corpus = corpus_of({make_doc("a.txt", "prayer. prayer. fasting")});
  auto candidates = build_candidate_set(corpus, 4, 2);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].key.joined() == "prayer");
}

TEST_CASE("build_candidate_set: surfaces merge under one stem") {
  Corpus corpus = corpus_of({make_doc("a.txt", "prayers. prayer")});
  auto candidates = build_candidate_set(corpus, 4, 1);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].key.joined() == "prayer");
  CHECK(candidates[0].surface_forms ==
        std::set<std::string>{"prayer", "prayers"});
}

TEST_CASE("build_candidate_set: empty result is an error") {
  Corpus corpus = corpus_of({make_doc("a.txt", "the of and")});
  CHECK_THROWS_AS(build_candidate_set(corpus, 4, 1), Error);
}

TEST_CASE("build_candidate_set: document order does not matter") {
  testsupport::SynthConfig cfg;
  cfg.seed = 123;
  Corpus corpus = testsupport::synth_corpus("t", CorpusRole::target, cfg, sw());
  auto baseline = build_candidate_set(corpus, 3, 1);

  Corpus shuffled = corpus;
  std::reverse(shuffled.documents.begin(), shuffled.documents.end());
  auto again = build_candidate_set(shuffled, 3, 1);

  REQUIRE(again.size() == baseline.size());
  for (std::size_t i = 0; i < baseline.size(); ++i) {
    CHECK(again[i].key == baseline[i].key);
    CHECK(again[i].occurrences == baseline[i].occurrences);
    CHECK(again[i].surface_forms == baseline[i].surface_forms);
  }
}
