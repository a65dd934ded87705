#include "lrltag/tagger.hpp"

#include <ctime>

#include <json.hpp>

#include "lrltag/digest.hpp"
#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"

namespace lrltag {

namespace {

constexpr int kBundleVersion = 1;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

}  // namespace

std::string BundleManifest::to_json() const {
  nlohmann::ordered_json doc;
  doc["version"] = version;
  doc["backend_id"] = backend_id;
  doc["model_name"] = model_name;
  doc["codec_sha256"] = codec_sha256;
  doc["created_utc"] = created_utc;
  return doc.dump() + "\n";
}

BundleManifest BundleManifest::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaMismatch(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc.contains("backend_id") ||
      !doc.contains("codec_sha256")) {
    throw SchemaMismatch("manifest must carry version, backend_id and codec_sha256");
  }
  BundleManifest manifest;
  try {
    manifest.version = doc["version"].get<int>();
    manifest.backend_id = doc["backend_id"].get<std::string>();
    manifest.model_name = doc.value("model_name", std::string{});
    manifest.codec_sha256 = doc["codec_sha256"].get<std::string>();
    manifest.created_utc = doc.value("created_utc", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw SchemaMismatch(std::string("manifest field has the wrong type: ") + e.what());
  }
  return manifest;
}

TrainedTagger TrainedTagger::fit(const Corpus& corpus, const BackendConfig& config) {
  if (corpus.empty()) {
    throw EmptyCorpus();
  }
  TagCodec codec = TagCodec::fit(corpus.tagset);
  std::shared_ptr<const TaggingModel> model = train_model(corpus, codec, config);
  return TrainedTagger(std::move(codec), std::move(model), config);
}

TrainedTagger TrainedTagger::assemble(TagCodec codec, std::shared_ptr<const TaggingModel> model,
                                      BackendConfig config) {
  if (!model) {
    throw ModelNotTrained("assemble requires a trained model");
  }
  return TrainedTagger(std::move(codec), std::move(model), std::move(config));
}

std::vector<std::string> TrainedTagger::predict_tags(const std::vector<std::string>& words) const {
  if (words.empty()) {
    throw EmptyInput("no words to tag");
  }
  return model_->predict_word_tags(words, codec_);
}

std::vector<std::pair<std::string, std::string>> TrainedTagger::predict(
    const std::vector<std::string>& words) const {
  auto tags = predict_tags(words);
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    pairs.emplace_back(words[i], tags[i]);
  }
  return pairs;
}

std::vector<std::pair<std::string, std::string>> TrainedTagger::predict(
    const std::string& text) const {
  auto words = split_whitespace(text);
  if (words.empty()) {
    throw EmptyInput("text contains no words");
  }
  return predict(words);
}

void TrainedTagger::save(const std::filesystem::path& directory) const {
  std::error_code ec;
  std::filesystem::create_directories(directory / kBackendDir, ec);
  if (ec) {
    throw IoFailure("cannot create bundle directory: " + directory.string());
  }
  const std::string codec_bytes = codec_.to_json();
  write_text_file(directory / kLabelsFile, codec_bytes);
  write_text_file(directory / kConfigFile, config_.to_json());
  model_->save_state(directory / kBackendDir);

  BundleManifest manifest;
  manifest.version = kBundleVersion;
  manifest.backend_id = model_->backend_id();
  manifest.model_name = config_.model_name;
  manifest.codec_sha256 = sha256_hex(codec_bytes);
  manifest.created_utc = utc_timestamp();
  write_text_file(directory / kManifestFile, manifest.to_json());
}

TrainedTagger TrainedTagger::load(const std::filesystem::path& directory) {
  const auto manifest = BundleManifest::from_json(read_text_file(directory / kManifestFile));
  if (manifest.version != kBundleVersion) {
    throw VersionMismatch("bundle version " + std::to_string(manifest.version) +
                          " is not supported (expected " + std::to_string(kBundleVersion) + ")");
  }
  const std::string codec_bytes = read_text_file(directory / kLabelsFile);
  if (sha256_hex(codec_bytes) != manifest.codec_sha256) {
    throw BundleCorrupt("codec checksum mismatch in " + directory.string());
  }
  TagCodec codec = TagCodec::from_json(codec_bytes);
  BackendConfig config = BackendConfig::from_json(read_text_file(directory / kConfigFile));
  const BackendId backend = backend_id_from_string(manifest.backend_id);
  if (backend != config.backend_id) {
    throw BundleCorrupt("manifest backend_id \"" + manifest.backend_id +
                        "\" does not match the config snapshot");
  }
  std::shared_ptr<const TaggingModel> model =
      load_model(backend, directory / kBackendDir, codec.size());
  return TrainedTagger(std::move(codec), std::move(model), std::move(config));
}

TrainedTagger TrainedTagger::load_pretrained(const std::filesystem::path& directory) {
  return load(directory);
}

}  // namespace lrltag
