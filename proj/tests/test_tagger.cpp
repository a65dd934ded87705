#include <doctest.h>

#include <regex>

#include "lrltag/digest.hpp"
#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"
#include "lrltag/tagger.hpp"
#include "support.hpp"

using namespace lrltag;

namespace {

Corpus fixture_corpus() {
  return make_corpus({
      {{"the", "cat", "sat"}, {"DT", "NN", "VB"}},
      {{"the", "dog", "ran"}, {"DT", "NN", "VB"}},
      {{"a", "bird", "sang"}, {"DT", "NN", "VB"}},
  });
}

TrainedTagger fixture_tagger() { return TrainedTagger::fit(fixture_corpus(), BackendConfig{}); }

/// Toy plug-in backend: tags every word with the single class "A".
class ConstantModel : public TaggingModel {
public:
  std::string backend_id() const override { return "baseline"; }
  std::size_t num_labels() const override { return 1; }
  std::vector<std::string> predict_word_tags(const std::vector<std::string>& words,
                                             const TagCodec& codec) const override {
    return std::vector<std::string>(words.size(), codec.decode(0));
  }
  void save_state(const std::filesystem::path&) const override {}
};

}  // namespace

TEST_CASE("fit produces a tagger whose codec spans the corpus tagset") {
  const TrainedTagger tagger = fixture_tagger();
  CHECK(tagger.codec().tags() == std::vector<std::string>{"DT", "NN", "VB"});
  CHECK(tagger.model().num_labels() == 3);
}

TEST_CASE("predict pairs each word with a tag") {
  const TrainedTagger tagger = fixture_tagger();
  const auto pairs = tagger.predict(std::vector<std::string>{"the", "cat", "sat"});
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"the", "DT"});
  CHECK(pairs[1] == std::pair<std::string, std::string>{"cat", "NN"});
  CHECK(pairs[2] == std::pair<std::string, std::string>{"sat", "VB"});

  // The text overload tokenizes on whitespace.
  CHECK(tagger.predict("the  cat") == tagger.predict(std::vector<std::string>{"the", "cat"}));
  CHECK_THROWS_AS(tagger.predict(std::vector<std::string>{}), EmptyInput);
  CHECK_THROWS_AS(tagger.predict("   "), EmptyInput);
}

TEST_CASE("bundles restore byte-identical behavior") {
  test::TempDir dir;
  const TrainedTagger tagger = fixture_tagger();
  const auto bundle = dir.path / "bundle";
  tagger.save(bundle);

  CHECK(std::filesystem::exists(bundle / kManifestFile));
  CHECK(std::filesystem::exists(bundle / kLabelsFile));
  CHECK(std::filesystem::exists(bundle / kConfigFile));
  CHECK(std::filesystem::exists(bundle / kBackendDir / kBaselineStateFile));

  const TrainedTagger back = TrainedTagger::load(bundle);
  CHECK(back.codec() == tagger.codec());
  CHECK(back.config() == tagger.config());
  CHECK(back.predict("the cat sat unknownword") == tagger.predict("the cat sat unknownword"));
}

TEST_CASE("manifest carries checksum, timestamp and backend identity") {
  test::TempDir dir;
  const TrainedTagger tagger = fixture_tagger();
  const auto bundle = dir.path / "bundle";
  tagger.save(bundle);

  const BundleManifest manifest = BundleManifest::from_json(read_text_file(bundle / kManifestFile));
  CHECK(manifest.version == 1);
  CHECK(manifest.backend_id == "baseline");
  CHECK(manifest.codec_sha256 == sha256_hex(read_text_file(bundle / kLabelsFile)));
  CHECK(std::regex_match(manifest.created_utc,
                         std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}

TEST_CASE("tampered codec bytes are detected on load") {
  test::TempDir dir;
  const auto bundle = dir.path / "bundle";
  fixture_tagger().save(bundle);

  std::string labels = read_text_file(bundle / kLabelsFile);
  // Swap a tag for another valid name; the checksum must catch it.
  labels.replace(labels.find("DT"), 2, "DA");
  write_text_file(bundle / kLabelsFile, labels);
  CHECK_THROWS_AS(TrainedTagger::load(bundle), BundleCorrupt);
}

TEST_CASE("unsupported manifest versions are rejected") {
  test::TempDir dir;
  const auto bundle = dir.path / "bundle";
  fixture_tagger().save(bundle);

  std::string manifest = read_text_file(bundle / kManifestFile);
  manifest.replace(manifest.find("\"version\":1"), 11, "\"version\":999");
  write_text_file(bundle / kManifestFile, manifest);
  CHECK_THROWS_AS(TrainedTagger::load(bundle), VersionMismatch);
}

TEST_CASE("manifest and config must agree on the backend") {
  test::TempDir dir;
  const auto bundle = dir.path / "bundle";
  fixture_tagger().save(bundle);

  std::string config = read_text_file(bundle / kConfigFile);
  config.replace(config.find("baseline"), 8, "transformer");
  config.replace(config.find("\"model_name\":\"\""), 15, "\"model_name\":\"x\"");
  write_text_file(bundle / kConfigFile, config);
  CHECK_THROWS_AS(TrainedTagger::load(bundle), BundleCorrupt);
}

TEST_CASE("loading from a missing directory fails cleanly") {
  test::TempDir dir;
  CHECK_THROWS_AS(TrainedTagger::load(dir.path / "nowhere"), IoFailure);
}

TEST_CASE("assemble accepts plug-in models") {
  const TagCodec codec = TagCodec::fit({"A"});
  const TrainedTagger tagger =
      TrainedTagger::assemble(codec, std::make_shared<ConstantModel>(), BackendConfig{});
  const auto pairs = tagger.predict("x y z");
  REQUIRE(pairs.size() == 3);
  for (const auto& [word, tag] : pairs) CHECK(tag == "A");
}

TEST_CASE("load_pretrained is load") {
  test::TempDir dir;
  const auto bundle = dir.path / "bundle";
  fixture_tagger().save(bundle);
  const TrainedTagger back = TrainedTagger::load_pretrained(bundle);
  CHECK(back.predict("the cat") == fixture_tagger().predict("the cat"));
}
