#include <doctest.h>

#include <algorithm>
#include <random>

#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"
#include "lrltag/labels.hpp"
#include "support.hpp"

using namespace lrltag;

TEST_CASE("fit assigns lexicographic ids and collapses duplicates") {
  const TagCodec codec = TagCodec::fit({"NN", "DT", "VB", "DT"});
  CHECK(codec.size() == 3);
  CHECK(codec.tags() == std::vector<std::string>{"DT", "NN", "VB"});
  CHECK(codec.encode("DT") == 0);
  CHECK(codec.encode("NN") == 1);
  CHECK(codec.encode("VB") == 2);
  CHECK(codec.decode(2) == "VB");
  CHECK(codec.ignore_id() == -100);
}

TEST_CASE("fit is insensitive to input order") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::string> tags;
    const int n = 1 + iter % 16;
    for (int i = 0; i < n; ++i) tags.push_back(test::random_word(rng, 1, 5));
    std::vector<std::string> shuffled = tags;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(TagCodec::fit(tags) == TagCodec::fit(shuffled));
  }
}

TEST_CASE("encode/decode are mutually inverse") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::string> tags;
    const int n = 1 + iter % 16;
    for (int i = 0; i < n; ++i) tags.push_back(test::random_word(rng, 1, 6));
    const TagCodec codec = TagCodec::fit(tags);
    for (const std::string& tag : tags) CHECK(codec.decode(codec.encode(tag)) == tag);
    for (int id = 0; id < static_cast<int>(codec.size()); ++id) {
      CHECK(codec.encode(codec.decode(id)) == id);
    }
    // Ids form exactly 0..n-1 in sorted-tag order.
    std::vector<std::string> sorted = codec.tags();
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
  }
}

TEST_CASE("unknown tags and ids are rejected, including the sentinel") {
  const TagCodec codec = TagCodec::fit({"A", "B"});
  CHECK_THROWS_AS(codec.encode("C"), UnknownTag);
  CHECK_THROWS_AS(codec.decode(2), UnknownId);
  CHECK_THROWS_AS(codec.decode(-1), UnknownId);
  CHECK_THROWS_AS(codec.decode(codec.ignore_id()), UnknownId);
}

TEST_CASE("degenerate tagsets are rejected") {
  CHECK_THROWS_AS(TagCodec::fit({}), EmptyTagset);
  CHECK_THROWS_AS(TagCodec::fit({""}), EmptyTagset);
  CHECK_THROWS_AS(TagCodec::fit({"A", ""}), EmptyTagset);
  // The sentinel may not collide with a real class id.
  CHECK_THROWS_AS(TagCodec::fit({"A", "B", "C"}, 1), SchemaMismatch);
  CHECK_NOTHROW(TagCodec::fit({"A", "B", "C"}, 3));
}

TEST_CASE("JSON persistence is byte-exact") {
  const TagCodec codec = TagCodec::fit({"NN", "DT", "VB"});
  const std::string bytes = codec.to_json();
  CHECK(bytes == "{\"version\":1,\"ignore_id\":-100,\"tags\":[\"DT\",\"NN\",\"VB\"]}\n");
  const TagCodec back = TagCodec::from_json(bytes);
  CHECK(back == codec);
  CHECK(back.to_json() == bytes);
}

TEST_CASE("file round-trip preserves the codec") {
  test::TempDir dir;
  const TagCodec codec = TagCodec::fit({"X", "Y"}, -1);
  const auto path = dir.path / "labels.json";
  codec.save(path);
  const TagCodec back = TagCodec::load(path);
  CHECK(back == codec);
  CHECK(back.ignore_id() == -1);
  CHECK(read_text_file(path) == codec.to_json());
}

TEST_CASE("schema violations are rejected on load") {
  CHECK_THROWS_AS(TagCodec::from_json("not json"), SchemaMismatch);
  CHECK_THROWS_AS(TagCodec::from_json("[]"), SchemaMismatch);
  CHECK_THROWS_AS(TagCodec::from_json(R"({"version":2,"ignore_id":-100,"tags":["A"]})"),
                  SchemaMismatch);
  // Stored tag lists must be sorted, unique, non-empty strings.
  CHECK_THROWS_AS(TagCodec::from_json(R"({"version":1,"ignore_id":-100,"tags":["B","A"]})"),
                  SchemaMismatch);
  CHECK_THROWS_AS(TagCodec::from_json(R"({"version":1,"ignore_id":-100,"tags":["A","A"]})"),
                  SchemaMismatch);
  CHECK_THROWS_AS(TagCodec::from_json(R"({"version":1,"ignore_id":-100,"tags":[]})"),
                  SchemaMismatch);
  CHECK_THROWS_AS(TagCodec::from_json(R"({"version":1,"ignore_id":0,"tags":["A","B"]})"),
                  SchemaMismatch);
  CHECK_THROWS_AS(TagCodec::from_json(R"({"version":1,"tags":["A"]})"), SchemaMismatch);
}
