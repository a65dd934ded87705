#include "lrltag/backend.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <json.hpp>

#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"

namespace lrltag {

namespace {

constexpr int kBaselineStateVersion = 1;
constexpr std::size_t kMaxSuffixLength = 4;
constexpr std::size_t kMinSuffixCount = 2;

using CountTable = std::map<std::string, std::map<std::string, std::size_t>>;

// argmax over count(tag | key); ties go to the lexicographically smallest
// tag, which std::map iteration order gives for free.
std::string argmax_tag(const std::map<std::string, std::size_t>& counts) {
  std::string best;
  std::size_t best_count = 0;
  for (const auto& [tag, count] : counts) {
    if (count > best_count) {
      best = tag;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

std::string to_string(BackendId id) {
  switch (id) {
    case BackendId::baseline:
      return "baseline";
    case BackendId::transformer:
      return "transformer";
  }
  throw UnsupportedFormat("unknown backend id");
}

BackendId backend_id_from_string(const std::string& name) {
  if (name == "baseline") {
    return BackendId::baseline;
  }
  if (name == "transformer") {
    return BackendId::transformer;
  }
  throw UnsupportedFormat("unknown backend id: \"" + name + "\"");
}

std::string BackendConfig::to_json() const {
  nlohmann::ordered_json doc;
  doc["backend_id"] = to_string(backend_id);
  doc["model_name"] = model_name;
  doc["max_length"] = max_length;
  doc["epochs"] = epochs;
  doc["batch_size"] = batch_size;
  doc["learning_rate"] = learning_rate;
  doc["seed"] = seed;
  return doc.dump() + "\n";
}

BackendConfig BackendConfig::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("backend config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("backend config must be a JSON object");
  }
  BackendConfig config;
  try {
    if (doc.contains("backend_id")) {
      config.backend_id = backend_id_from_string(doc["backend_id"].get<std::string>());
    }
    if (doc.contains("model_name")) {
      config.model_name = doc["model_name"].get<std::string>();
    }
    if (doc.contains("max_length")) {
      config.max_length = doc["max_length"].get<std::size_t>();
    }
    if (doc.contains("epochs")) {
      config.epochs = doc["epochs"].get<std::size_t>();
    }
    if (doc.contains("batch_size")) {
      config.batch_size = doc["batch_size"].get<std::size_t>();
    }
    if (doc.contains("learning_rate")) {
      config.learning_rate = doc["learning_rate"].get<double>();
    }
    if (doc.contains("seed")) {
      config.seed = doc["seed"].get<std::int64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("backend config field has the wrong type: ") + e.what());
  } catch (const UnsupportedFormat& e) {
    throw ConfigError(e.what());
  }
  if (config.max_length == 0 || config.epochs == 0 || config.batch_size == 0 ||
      !(config.learning_rate > 0.0)) {
    throw ConfigError("max_length, epochs, batch_size and learning_rate must be positive");
  }
  if (config.backend_id == BackendId::transformer && config.model_name.empty()) {
    throw ConfigError("transformer backend requires a model_name");
  }
  return config;
}

std::string utf8_suffix(const std::string& word, std::size_t length) {
  std::size_t pos = word.size();
  std::size_t taken = 0;
  while (pos > 0 && taken < length) {
    --pos;
    // Step over UTF-8 continuation bytes to the codepoint start.
    while (pos > 0 && (static_cast<unsigned char>(word[pos]) & 0xC0) == 0x80) {
      --pos;
    }
    ++taken;
  }
  return word.substr(pos);
}

BaselineModel BaselineModel::train(const Corpus& corpus, const TagCodec& codec) {
  if (corpus.empty()) {
    throw EmptyCorpus();
  }
  CountTable word_counts;
  CountTable suffix_counts;
  std::map<std::string, std::size_t> tag_counts;
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t i = 0; i < sentence.words.size(); ++i) {
      const auto& word = sentence.words[i];
      const auto& tag = sentence.tags[i];
      ++word_counts[word][tag];
      ++tag_counts[tag];
      for (std::size_t len = 1; len <= kMaxSuffixLength; ++len) {
        std::string suffix = utf8_suffix(word, len);
        ++suffix_counts[suffix][tag];
        if (suffix.size() == word.size()) {
          break;  // suffix already covers the whole word
        }
      }
    }
  }

  BaselineModel model;
  model.num_labels_ = codec.size();
  for (const auto& [word, counts] : word_counts) {
    model.word_table_.emplace(word, argmax_tag(counts));
  }
  for (const auto& [suffix, counts] : suffix_counts) {
    std::size_t total = 0;
    for (const auto& [tag, count] : counts) {
      total += count;
    }
    if (total >= kMinSuffixCount) {
      model.suffix_table_.emplace(suffix, argmax_tag(counts));
    }
  }
  model.majority_tag_ = argmax_tag(tag_counts);
  return model;
}

std::vector<std::string> BaselineModel::predict_word_tags(const std::vector<std::string>& words,
                                                          const TagCodec& codec) const {
  (void)codec;
  if (majority_tag_.empty()) {
    throw ModelNotTrained("baseline model has no state");
  }
  std::vector<std::string> tags;
  tags.reserve(words.size());
  for (const auto& word : words) {
    auto it = word_table_.find(word);
    if (it != word_table_.end()) {
      tags.push_back(it->second);
      continue;
    }
    std::string tag;
    for (std::size_t len = kMaxSuffixLength; len >= 1; --len) {
      auto suffix_it = suffix_table_.find(utf8_suffix(word, len));
      if (suffix_it != suffix_table_.end()) {
        tag = suffix_it->second;
        break;
      }
    }
    tags.push_back(tag.empty() ? majority_tag_ : tag);
  }
  return tags;
}

std::string BaselineModel::state_json() const {
  nlohmann::ordered_json doc;
  doc["version"] = kBaselineStateVersion;
  // std::map iteration keeps key order sorted, so the bytes are stable.
  doc["word_table"] = word_table_;
  doc["suffix_table"] = suffix_table_;
  doc["majority_tag"] = majority_tag_;
  return doc.dump() + "\n";
}

BaselineModel BaselineModel::from_state_json(const std::string& text, std::size_t num_labels) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaMismatch(std::string("baseline state is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc.contains("word_table") ||
      !doc.contains("suffix_table") || !doc.contains("majority_tag")) {
    throw SchemaMismatch("baseline state must carry version, word_table, suffix_table, majority_tag");
  }
  if (!doc["version"].is_number_integer() || doc["version"].get<int>() != kBaselineStateVersion) {
    throw SchemaMismatch("unsupported baseline state version: " + doc["version"].dump());
  }
  BaselineModel model;
  try {
    model.word_table_ = doc["word_table"].get<std::map<std::string, std::string>>();
    model.suffix_table_ = doc["suffix_table"].get<std::map<std::string, std::string>>();
    model.majority_tag_ = doc["majority_tag"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaMismatch(std::string("baseline state field has the wrong type: ") + e.what());
  }
  if (model.majority_tag_.empty()) {
    throw SchemaMismatch("baseline state has an empty majority_tag");
  }
  model.num_labels_ = num_labels;
  return model;
}

void BaselineModel::save_state(const std::filesystem::path& backend_dir) const {
  write_text_file(backend_dir / kBaselineStateFile, state_json());
}

BaselineModel BaselineModel::load_state(const std::filesystem::path& backend_dir,
                                        std::size_t num_labels) {
  return from_state_json(read_text_file(backend_dir / kBaselineStateFile), num_labels);
}

bool backend_available(BackendId id) {
  return id == BackendId::baseline;
}

std::unique_ptr<TaggingModel> train_model(const Corpus& corpus, const TagCodec& codec,
                                          const BackendConfig& config) {
  if (corpus.empty()) {
    throw EmptyCorpus();
  }
  for (const auto& tag : corpus.tagset) {
    if (!codec.contains(tag)) {
      throw CodecCoverageError("corpus tag \"" + tag + "\" is unknown to the codec");
    }
  }
  switch (config.backend_id) {
    case BackendId::baseline:
      return std::make_unique<BaselineModel>(BaselineModel::train(corpus, codec));
    case BackendId::transformer:
      throw BackendUnavailable(
          "transformer backend runtime is not linked into this build; use backend_id "
          "\"baseline\" or install an encoder plug-in");
  }
  throw UnsupportedFormat("unknown backend id");
}

std::unique_ptr<TaggingModel> load_model(BackendId id, const std::filesystem::path& backend_dir,
                                         std::size_t num_labels) {
  switch (id) {
    case BackendId::baseline:
      return std::make_unique<BaselineModel>(BaselineModel::load_state(backend_dir, num_labels));
    case BackendId::transformer:
      throw BackendUnavailable(
          "bundle was trained with the transformer backend, which is not available in this build");
  }
  throw UnsupportedFormat("unknown backend id");
}

namespace {

void check_logit_shape(const std::vector<std::vector<double>>& logits,
                       const std::vector<int>& labels) {
  if (logits.size() != labels.size()) {
    throw LengthMismatch(logits.size(), labels.size());
  }
  if (logits.empty()) {
    throw EmptyInput("no logit rows");
  }
}

// log softmax of one row, numerically stable.
std::vector<double> log_softmax(const std::vector<double>& row) {
  double max_logit = *std::max_element(row.begin(), row.end());
  double sum = 0.0;
  for (double v : row) {
    sum += std::exp(v - max_logit);
  }
  double log_sum = max_logit + std::log(sum);
  std::vector<double> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = row[i] - log_sum;
  }
  return out;
}

}  // namespace

double masked_cross_entropy(const std::vector<std::vector<double>>& logits,
                            const std::vector<int>& labels, int ignore_id) {
  check_logit_shape(logits, labels);
  double total = 0.0;
  std::size_t scored = 0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (labels[i] == ignore_id) {
      continue;
    }
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= logits[i].size()) {
      throw UnknownId(labels[i]);
    }
    total -= log_softmax(logits[i])[static_cast<std::size_t>(labels[i])];
    ++scored;
  }
  if (scored == 0) {
    throw EmptyInput("every label is the ignore sentinel; the mean loss is undefined");
  }
  return total / static_cast<double>(scored);
}

std::vector<std::vector<double>> masked_cross_entropy_grad(
    const std::vector<std::vector<double>>& logits, const std::vector<int>& labels,
    int ignore_id) {
  check_logit_shape(logits, labels);
  std::size_t scored = 0;
  for (int label : labels) {
    if (label != ignore_id) {
      ++scored;
    }
  }
  if (scored == 0) {
    throw EmptyInput("every label is the ignore sentinel; the mean loss is undefined");
  }
  std::vector<std::vector<double>> grad(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) {
    grad[i].assign(logits[i].size(), 0.0);
    if (labels[i] == ignore_id) {
      continue;
    }
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= logits[i].size()) {
      throw UnknownId(labels[i]);
    }
    const auto log_probs = log_softmax(logits[i]);
    for (std::size_t c = 0; c < logits[i].size(); ++c) {
      grad[i][c] = std::exp(log_probs[c]) / static_cast<double>(scored);
    }
    grad[i][static_cast<std::size_t>(labels[i])] -= 1.0 / static_cast<double>(scored);
  }
  return grad;
}

}  // namespace lrltag
