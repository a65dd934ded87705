#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lrltag/corpus.hpp"
#include "lrltag/errors.hpp"
#include "support.hpp"

using namespace lrltag;

namespace {

Corpus tiny_corpus() {
  return make_corpus({
      {{"the", "cat", "sat"}, {"DT", "NN", "VB"}},
      {{"a", "dog"}, {"DT", "NN"}},
  });
}

Corpus random_corpus(std::mt19937_64& rng, std::size_t n_sentences, std::size_t k_tags) {
  const std::vector<std::string> pool = test::tag_pool(k_tags);
  std::uniform_int_distribution<std::size_t> sent_len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<TaggedSentence> sentences;
  for (std::size_t s = 0; s < n_sentences; ++s) {
    TaggedSentence sentence;
    const std::size_t len = sent_len(rng);
    for (std::size_t i = 0; i < len; ++i) {
      sentence.words.push_back(test::random_word(rng));
      sentence.tags.push_back(pool[pick(rng)]);
    }
    sentences.push_back(std::move(sentence));
  }
  return make_corpus(std::move(sentences));
}

}  // namespace

TEST_CASE("two-column parse handles the canonical layout") {
  const Corpus corpus = parse_two_column("the\tDT\ncat\tNN\n\nruns\tVB\n");
  REQUIRE(corpus.sentences.size() == 2);
  CHECK(corpus.sentences[0].words == std::vector<std::string>{"the", "cat"});
  CHECK(corpus.sentences[0].tags == std::vector<std::string>{"DT", "NN"});
  CHECK(corpus.sentences[1].words == std::vector<std::string>{"runs"});
  CHECK(corpus.token_count() == 3);
  CHECK(corpus.tagset == std::vector<std::string>{"DT", "NN", "VB"});
}

TEST_CASE("two-column parse tolerates CRLF and missing trailing newline") {
  const Corpus corpus = parse_two_column("a\tX\r\nb\tY");
  REQUIRE(corpus.sentences.size() == 1);
  CHECK(corpus.sentences[0].words == std::vector<std::string>{"a", "b"});
  CHECK(corpus.sentences[0].tags == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("two-column parse of empty input yields an empty corpus") {
  const Corpus corpus = parse_two_column("");
  CHECK(corpus.sentences.empty());
  CHECK(corpus.tagset.empty());
  CHECK(corpus.token_count() == 0);
}

TEST_CASE("two-column parse rejects malformed lines with their line number") {
  CHECK_THROWS_AS(parse_two_column("word-without-tag\n"), MalformedLine);
  CHECK_THROWS_AS(parse_two_column("a\tX\tY\n"), MalformedLine);
  try {
    parse_two_column("a\tX\nbroken\n");
    FAIL("expected MalformedLine");
  } catch (const MalformedLine& e) {
    CHECK(e.line_no == 2);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("serialize emits one blank line between sentences and a final newline") {
  CHECK(serialize_two_column(tiny_corpus()) ==
        "the\tDT\ncat\tNN\nsat\tVB\n\na\tDT\ndog\tNN\n");
}

TEST_CASE("parse/serialize round-trips random corpora") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const Corpus corpus = random_corpus(rng, 1 + iter % 17, 2 + iter % 5);
    const Corpus back = parse_two_column(serialize_two_column(corpus));
    REQUIRE(back == corpus);
    // Serialization is canonical: a second pass is byte-identical.
    CHECK(serialize_two_column(back) == serialize_two_column(corpus));
  }
}

TEST_CASE("make_corpus validates sentence shape") {
  CHECK_THROWS_AS(make_corpus({{{"a"}, {"X", "Y"}}}), LengthMismatch);
  CHECK_THROWS_AS(make_corpus({{{}, {}}}), EmptyInput);
}

TEST_CASE("normalize_parallel zips whitespace-split words and tags") {
  const TaggedSentence sentence = normalize_parallel("  The  cat ", "DT NN");
  CHECK(sentence.words == std::vector<std::string>{"The", "cat"});
  CHECK(sentence.tags == std::vector<std::string>{"DT", "NN"});
  CHECK_THROWS_AS(normalize_parallel("The cat", "DT"), LengthMismatch);
  CHECK_THROWS_AS(normalize_parallel("", ""), EmptyInput);
}

TEST_CASE("parallel parse reports the offending row") {
  const Corpus corpus = parse_parallel("The cat\tDT NN\nruns\tVB\n");
  REQUIRE(corpus.sentences.size() == 2);
  CHECK(corpus.sentences[1].words == std::vector<std::string>{"runs"});
  try {
    parse_parallel("ok fine\tA B\nThe cat\tDT\n");
    FAIL("expected LengthMismatch");
  } catch (const LengthMismatch& e) {
    CHECK(e.line_no == 2);
  }
}

TEST_CASE("split respects floor(n*fraction) and partitions the corpus") {
  std::mt19937_64 rng(11);
  const Corpus corpus = random_corpus(rng, 10, 3);
  const auto [train, test] = split_train_test(corpus, 0.8, 42);
  CHECK(train.sentences.size() == 8);
  CHECK(test.sentences.size() == 2);

  // Together the halves hold exactly the original sentences.
  std::multiset<std::string> expected;
  for (const TaggedSentence& s : corpus.sentences) expected.insert(serialize_two_column(make_corpus({s})));
  std::multiset<std::string> actual;
  for (const TaggedSentence& s : train.sentences) actual.insert(serialize_two_column(make_corpus({s})));
  for (const TaggedSentence& s : test.sentences) actual.insert(serialize_two_column(make_corpus({s})));
  CHECK(actual == expected);
}

TEST_CASE("split is deterministic per seed") {
  std::mt19937_64 rng(13);
  const Corpus corpus = random_corpus(rng, 50, 4);
  const auto [a_train, a_test] = split_train_test(corpus, 0.8, 7);
  const auto [b_train, b_test] = split_train_test(corpus, 0.8, 7);
  CHECK(a_train == b_train);
  CHECK(a_test == b_test);
  const auto [c_train, c_test] = split_train_test(corpus, 0.8, 8);
  CHECK(c_train.sentences != a_train.sentences);
}

TEST_CASE("split rejects degenerate outcomes") {
  std::mt19937_64 rng(17);
  CHECK_THROWS_AS(split_train_test(Corpus{}, 0.8, 0), EmptyCorpus);
  const Corpus one = random_corpus(rng, 1, 2);
  CHECK_THROWS_AS(split_train_test(one, 0.5, 0), DegenerateSplit);
  const Corpus five = random_corpus(rng, 5, 2);
  CHECK_THROWS_AS(split_train_test(five, 0.05, 0), DegenerateSplit);
}

TEST_CASE("tag distribution counts every token exactly once") {
  const TagDistribution dist = tag_distribution(tiny_corpus());
  CHECK(dist.total == 5);
  CHECK(dist.counts.at("DT") == 2);
  CHECK(dist.counts.at("NN") == 2);
  CHECK(dist.counts.at("VB") == 1);
  CHECK(dist.fractions.at("VB") == doctest::Approx(0.2).epsilon(1e-12));
  double sum = 0.0;
  for (const auto& [tag, fraction] : dist.fractions) sum += fraction;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(tag_distribution(Corpus{}), EmptyCorpus);
}

TEST_CASE("distribution CSV orders by descending count, ties by tag") {
  const Corpus corpus = make_corpus({
      {{"a", "b", "c", "d", "e"}, {"NN", "NN", "DT", "VB", "DT"}},
  });
  CHECK(distribution_csv(tag_distribution(corpus)) ==
        "tag,count,fraction\n"
        "DT,2,0.400000\n"
        "NN,2,0.400000\n"
        "VB,1,0.200000\n");
}

TEST_CASE("top2 share covers the two most frequent tags") {
  const TagDistribution dist = tag_distribution(tiny_corpus());
  CHECK(top2_share(dist) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("whitespace splitting never yields empty tokens") {
  CHECK(split_whitespace("  a \t b\nc  ") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_whitespace("   ").empty());
  CHECK(split_whitespace("").empty());
}

TEST_CASE("fixed formatting rounds half up") {
  CHECK(format_fixed(0.0, 2) == "0.00");
  CHECK(format_fixed(0.125, 2) == "0.13");
  CHECK(format_fixed(0.6667, 2) == "0.67");
  CHECK(format_fixed(1.0, 4) == "1.0000");
  CHECK(format_fixed(4462.0 / 4607.0, 4) == "0.9685");
  CHECK(format_fixed(2.0 / 3.0, 6) == "0.666667");
}
