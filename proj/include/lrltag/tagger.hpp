#ifndef LRLTAG_TAGGER_HPP
#define LRLTAG_TAGGER_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lrltag/backend.hpp"
#include "lrltag/corpus.hpp"
#include "lrltag/labels.hpp"

namespace lrltag {

/// Bundle directory layout:
///   manifest.json   {"version":1,"backend_id":...,"model_name":...,
///                    "codec_sha256":...,"created_utc":...}
///   labels.json     the tag codec
///   config.json     training configuration snapshot
///   backend/        backend state in its native format
struct BundleManifest {
  int version = 1;
  std::string backend_id;
  std::string model_name;
  std::string codec_sha256;
  std::string created_utc;

  std::string to_json() const;
  static BundleManifest from_json(const std::string& text);  // SchemaMismatch
};

inline const std::string kManifestFile = "manifest.json";
inline const std::string kLabelsFile = "labels.json";
inline const std::string kConfigFile = "config.json";
inline const std::string kBackendDir = "backend";

/// Facade tying corpus, codec and backend into fit / predict / save / load.
/// Immutable once constructed; concurrent predict calls are safe.
class TrainedTagger {
public:
  /// Fits a codec from corpus.tagset, then trains the configured backend.
  static TrainedTagger fit(const Corpus& corpus, const BackendConfig& config);

  /// Wraps pre-built parts (plug-in backends construct taggers this way).
  static TrainedTagger assemble(TagCodec codec, std::shared_ptr<const TaggingModel> model,
                                BackendConfig config);

  /// One (word, tag) pair per input word, in order. Throws EmptyInput.
  std::vector<std::pair<std::string, std::string>> predict(
      const std::vector<std::string>& words) const;

  /// Whitespace-tokenizes the text, then tags it.
  std::vector<std::pair<std::string, std::string>> predict(const std::string& text) const;

  /// Tags one sentence without pairing, for bulk evaluation.
  std::vector<std::string> predict_tags(const std::vector<std::string>& words) const;

  void save(const std::filesystem::path& directory) const;  // IoFailure

  /// Validates the manifest (version, codec checksum) before loading state.
  /// Throws VersionMismatch, BundleCorrupt, BackendUnavailable, IoFailure.
  static TrainedTagger load(const std::filesystem::path& directory);

  /// Same contract as load; no fit call is required before predict.
  static TrainedTagger load_pretrained(const std::filesystem::path& directory);

  const TagCodec& codec() const { return codec_; }
  const BackendConfig& config() const { return config_; }
  const TaggingModel& model() const { return *model_; }

private:
  TrainedTagger(TagCodec codec, std::shared_ptr<const TaggingModel> model, BackendConfig config)
      : codec_(std::move(codec)), model_(std::move(model)), config_(std::move(config)) {}

  TagCodec codec_;
  std::shared_ptr<const TaggingModel> model_;
  BackendConfig config_;
};

}  // namespace lrltag

#endif
