#ifndef LRLTAG_RUN_CONFIG_HPP
#define LRLTAG_RUN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lrltag/backend.hpp"

namespace lrltag {

/// On-disk corpus layouts the toolkit reads.
enum class CorpusFormat { two_column, parallel };

std::string to_string(CorpusFormat format);
CorpusFormat corpus_format_from_string(const std::string& name);  // UnsupportedFormat

/// Held-out evaluation carved from the training file when no eval_path is
/// given.
struct SplitSpec {
  double fraction = 0.8;
  std::uint64_t seed = 0;

  bool operator==(const SplitSpec&) const = default;
};

/// One training/evaluation run, fully described by a JSON file. Swapping
/// languages is a config edit, never a code edit.
struct RunConfig {
  std::string language;
  std::filesystem::path train_path;
  std::optional<std::filesystem::path> eval_path;
  CorpusFormat format = CorpusFormat::two_column;
  BackendConfig backend;
  std::optional<SplitSpec> split;
  std::filesystem::path output_dir;

  /// Parses and validates. Exactly one of eval_path / split must be given;
  /// language, train_path and output_dir are required. Throws ConfigError.
  static RunConfig from_json(const std::string& text);

  /// Reads `path` and resolves train_path, eval_path and output_dir
  /// relative to its directory. Throws IoFailure, ConfigError.
  static RunConfig load(const std::filesystem::path& path);

  std::string to_json() const;
};

/// Dotted key paths whose values differ between two JSON documents (keys
/// missing on either side count), sorted. Throws ConfigError on bad JSON.
std::vector<std::string> config_diff(const std::string& a_json, const std::string& b_json);

/// Bundle cache root: $LRL_TAGGER_HOME if set, else $HOME/.lrl-tagger,
/// else ./.lrl-tagger.
std::filesystem::path default_home();

/// Paths and names containing a separator resolve as given; bare names of
/// directories that do not exist locally resolve below default_home().
std::filesystem::path resolve_bundle_dir(const std::string& name_or_path);

}  // namespace lrltag

#endif
