#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "support/synth.hpp"
#include "termite/pso.hpp"
#include "termite/tokenize.hpp"

using namespace termite;

namespace {
const StopwordSet& sw() { return StopwordSet::builtin(); }

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}
}  // namespace

TEST_CASE("tokenize: lowercases and flags stopwords") {
  auto tokens = tokenize("The ritual prayer.", sw());
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].surface == "the");
  CHECK(tokens[0].is_stopword);
  CHECK(tokens[1].surface == "ritual");
  CHECK_FALSE(tokens[1].is_stopword);
  CHECK(tokens[2].surface == "prayer");
  CHECK_FALSE(tokens[2].is_stopword);
}

TEST_CASE("tokenize: empty input") {
  CHECK(tokenize("", sw()).empty());
  CHECK(tokenize("  \t\n ", sw()).empty());
}

TEST_CASE("tokenize: internal hyphens kept, numerics dropped") {
  auto tokens = tokenize("mid-day prayers, 5 times", sw());
  REQUIRE(tokens.size() == 3);
  CHECK(tokens[0].surface == "mid-day");
  CHECK(tokens[1].surface == "prayers");
  CHECK_FALSE(tokens[1].is_stopword);
  CHECK(tokens[2].surface == "times");
  CHECK(tokens[2].position == 2);
}

TEST_CASE("tokenize: positions contiguous from zero") {
  auto tokens = tokenize("alpha 5 beta 42 gamma", sw());
  REQUIRE(tokens.size() == 3);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    CHECK(tokens[i].position == i);
  }
}

TEST_CASE("tokenize: apostrophes inside words") {
  auto tokens = tokenize("don't worry, 'tis fine", sw());
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].surface == "don't");
  CHECK(tokens[0].is_stopword);
  CHECK(tokens[2].surface == "tis");  // leading apostrophe is a separator
}

TEST_CASE("tokenize: hyphen runs split") {
  auto tokens = tokenize("long--dash a-b-c -edge edge-", sw());
  auto s = surfaces(tokens);
  CHECK(s == std::vector<std::string>{"long", "dash", "a-b-c", "edge", "edge"});
}

TEST_CASE("tokenize: sentence boundaries flagged") {
  auto tokens = tokenize("stone river. bright stone; deep", sw());
  REQUIRE(tokens.size() == 5);
  CHECK_FALSE(tokens[0].follows_break);
  CHECK_FALSE(tokens[1].follows_break);
  CHECK(tokens[2].follows_break);  // after '.'
  CHECK_FALSE(tokens[3].follows_break);
  CHECK(tokens[4].follows_break);  // after ';'
}

TEST_CASE("tokenize: comma is not a sentence boundary") {
  auto tokens = tokenize("stone, river", sw());
  REQUIRE(tokens.size() == 2);
  CHECK_FALSE(tokens[1].follows_break);
}

TEST_CASE("tokenize: break survives a dropped numeric token") {
  auto tokens = tokenize("stone. 42 river", sw());
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[1].follows_break);
}

TEST_CASE("tokenize: idempotent on its own surfaces") {
  // rejoin with spaces and retokenize; surfaces and flags must reproduce
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    testsupport::SynthConfig cfg;
    cfg.num_docs = 1;
    cfg.seed = rng();
    Corpus corpus =
        testsupport::synth_corpus("t", CorpusRole::target, cfg, sw());
    const auto& tokens = corpus.documents[0].tokens;
    std::string joined;
    for (const auto& t : tokens) {
      if (!joined.empty()) joined.push_back(' ');
      joined += t.surface;
    }
    auto again = tokenize(joined, sw());
    REQUIRE(again.size() == tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      CHECK(again[i].surface == tokens[i].surface);
      CHECK(again[i].is_stopword == tokens[i].is_stopword);
    }
  }
}

TEST_CASE("sanitize_utf8: invalid bytes replaced, valid sequences kept") {
  std::string bad = "pray\xFFing caf\xC3\xA9 b\xC0rn";
  std::string clean = sanitize_utf8(bad);
  CHECK(clean == "pray ing caf\xC3\xA9 b rn");
  auto tokens = tokenize(clean, sw());
  REQUIRE(!tokens.empty());
  CHECK(tokens[0].surface == "pray");
  CHECK(tokens[2].surface == "caf\xC3\xA9");
}
