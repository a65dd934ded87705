#ifndef LRLTAG_BACKEND_HPP
#define LRLTAG_BACKEND_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lrltag/corpus.hpp"
#include "lrltag/labels.hpp"

namespace lrltag {

enum class BackendId { baseline, transformer };

std::string to_string(BackendId id);
BackendId backend_id_from_string(const std::string& name);  // UnsupportedFormat

/// Training/runtime knobs shared by all backends. The baseline ignores the
/// encoder-specific fields.
struct BackendConfig {
  BackendId backend_id = BackendId::baseline;
  std::string model_name;
  std::size_t max_length = 256;
  std::size_t epochs = 3;
  std::size_t batch_size = 16;
  double learning_rate = 5e-5;
  std::int64_t seed = 42;

  bool operator==(const BackendConfig&) const = default;

  std::string to_json() const;
  static BackendConfig from_json(const std::string& text);  // ConfigError
};

/// Contract every tagging backend satisfies. A trained model is immutable
/// and safe for concurrent predict calls.
class TaggingModel {
public:
  virtual ~TaggingModel() = default;
  virtual std::string backend_id() const = 0;
  virtual std::size_t num_labels() const = 0;
  /// One tag per word, in order. Throws ModelNotTrained.
  virtual std::vector<std::string> predict_word_tags(const std::vector<std::string>& words,
                                                     const TagCodec& codec) const = 0;
  /// Persists native state below `backend_dir`.
  virtual void save_state(const std::filesystem::path& backend_dir) const = 0;
};

/// Frequency tagger with suffix back-off:
///   1. known words: argmax of count(tag | word), ties to the
///      lexicographically smallest tag;
///   2. unknown words: longest suffix (4 down to 1 codepoints) seen at
///      least twice in training, argmax of count(tag | suffix), same
///      tie-break;
///   3. fallback: corpus-wide majority tag, same tie-break.
class BaselineModel : public TaggingModel {
public:
  BaselineModel() = default;

  static BaselineModel train(const Corpus& corpus, const TagCodec& codec);

  std::string backend_id() const override { return "baseline"; }
  std::size_t num_labels() const override { return num_labels_; }
  std::vector<std::string> predict_word_tags(const std::vector<std::string>& words,
                                             const TagCodec& codec) const override;
  void save_state(const std::filesystem::path& backend_dir) const override;
  static BaselineModel load_state(const std::filesystem::path& backend_dir,
                                  std::size_t num_labels);

  /// Deterministic state bytes:
  /// {"version":1,"word_table":{...},"suffix_table":{...},"majority_tag":"..."}.
  std::string state_json() const;
  static BaselineModel from_state_json(const std::string& text, std::size_t num_labels);

  const std::map<std::string, std::string>& word_table() const { return word_table_; }
  const std::map<std::string, std::string>& suffix_table() const { return suffix_table_; }
  const std::string& majority_tag() const { return majority_tag_; }

private:
  std::map<std::string, std::string> word_table_;
  std::map<std::string, std::string> suffix_table_;
  std::string majority_tag_;
  std::size_t num_labels_ = 0;
};

inline const std::string kBaselineStateFile = "baseline.json";

/// True when the given backend can train/load in this build.
bool backend_available(BackendId id);

/// Trains the configured backend. Throws EmptyCorpus, CodecCoverageError,
/// BackendUnavailable.
std::unique_ptr<TaggingModel> train_model(const Corpus& corpus, const TagCodec& codec,
                                          const BackendConfig& config);

/// Restores backend state persisted by TaggingModel::save_state.
std::unique_ptr<TaggingModel> load_model(BackendId id, const std::filesystem::path& backend_dir,
                                         std::size_t num_labels);

/// Last `length` codepoints of a UTF-8 string (the whole string when it is
/// shorter).
std::string utf8_suffix(const std::string& word, std::size_t length);

/// Mean cross-entropy over rows whose label is not ignore_id; rows carrying
/// the sentinel contribute nothing to the loss or its gradient. This is the
/// loss contract encoder plug-ins train under. Throws EmptyInput when every
/// row is ignored (the mean is undefined).
double masked_cross_entropy(const std::vector<std::vector<double>>& logits,
                            const std::vector<int>& labels, int ignore_id);

/// d loss / d logits for masked_cross_entropy; exactly zero at ignored rows.
std::vector<std::vector<double>> masked_cross_entropy_grad(
    const std::vector<std::vector<double>>& logits, const std::vector<int>& labels, int ignore_id);

}  // namespace lrltag

#endif
