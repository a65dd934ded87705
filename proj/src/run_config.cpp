#include "lrltag/run_config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>

#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"

namespace lrltag {

namespace {

nlohmann::json parse_object(const std::string& text, const std::string& what) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(what + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(what + " must be a JSON object");
  return doc;
}

void flatten(const nlohmann::json& node, const std::string& prefix,
             std::vector<std::pair<std::string, nlohmann::json>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out.emplace_back(prefix, node);
}

}  // namespace

std::string to_string(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::two_column: return "two_column";
    case CorpusFormat::parallel: return "parallel";
  }
  throw UnsupportedFormat("corpus format");
}

CorpusFormat corpus_format_from_string(const std::string& name) {
  if (name == "two_column") return CorpusFormat::two_column;
  if (name == "parallel") return CorpusFormat::parallel;
  throw UnsupportedFormat(name);
}

RunConfig RunConfig::from_json(const std::string& text) {
  const nlohmann::json doc = parse_object(text, "run config");

  static const std::vector<std::string> known = {"language", "train_path", "eval_path",
                                                 "format",   "backend",    "split",
                                                 "output_dir"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError("unknown run config key: " + key);
    }
  }

  RunConfig config;
  try {
    if (!doc.contains("language") || !doc["language"].is_string() ||
        doc["language"].get<std::string>().empty()) {
      throw ConfigError("run config requires a non-empty \"language\"");
    }
    config.language = doc["language"].get<std::string>();

    if (!doc.contains("train_path") || !doc["train_path"].is_string() ||
        doc["train_path"].get<std::string>().empty()) {
      throw ConfigError("run config requires a non-empty \"train_path\"");
    }
    config.train_path = doc["train_path"].get<std::string>();

    if (doc.contains("eval_path")) {
      if (!doc["eval_path"].is_string() || doc["eval_path"].get<std::string>().empty()) {
        throw ConfigError("\"eval_path\" must be a non-empty string");
      }
      config.eval_path = std::filesystem::path(doc["eval_path"].get<std::string>());
    }

    if (doc.contains("format")) {
      config.format = corpus_format_from_string(doc["format"].get<std::string>());
    }

    if (!doc.contains("backend")) throw ConfigError("run config requires a \"backend\" object");
    config.backend = BackendConfig::from_json(doc["backend"].dump());

    if (doc.contains("split")) {
      const nlohmann::json& split = doc["split"];
      if (!split.is_object()) throw ConfigError("\"split\" must be an object");
      SplitSpec spec;
      if (split.contains("fraction")) spec.fraction = split["fraction"].get<double>();
      if (split.contains("seed")) spec.seed = split["seed"].get<std::uint64_t>();
      if (!(spec.fraction > 0.0) || !(spec.fraction < 1.0)) {
        throw ConfigError("split.fraction must lie strictly between 0 and 1");
      }
      config.split = spec;
    }

    if (!doc.contains("output_dir") || !doc["output_dir"].is_string() ||
        doc["output_dir"].get<std::string>().empty()) {
      throw ConfigError("run config requires a non-empty \"output_dir\"");
    }
    config.output_dir = doc["output_dir"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("run config field has the wrong type: ") + e.what());
  } catch (const UnsupportedFormat& e) {
    throw ConfigError(e.what());
  }

  // Evaluation data must come from exactly one source.
  if (config.eval_path.has_value() == config.split.has_value()) {
    throw ConfigError("exactly one of \"eval_path\" and \"split\" must be set");
  }
  return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  RunConfig config = from_json(read_text_file(path));
  const std::filesystem::path base = path.has_parent_path() ? path.parent_path()
                                                            : std::filesystem::path(".");
  auto anchor = [&](std::filesystem::path& p) {
    if (p.is_relative()) p = base / p;
  };
  anchor(config.train_path);
  if (config.eval_path) anchor(*config.eval_path);
  anchor(config.output_dir);
  return config;
}

std::string RunConfig::to_json() const {
  nlohmann::ordered_json doc;
  doc["language"] = language;
  doc["train_path"] = train_path.string();
  if (eval_path) doc["eval_path"] = eval_path->string();
  doc["format"] = to_string(format);
  doc["backend"] = nlohmann::ordered_json::parse(backend.to_json());
  if (split) {
    doc["split"] = nlohmann::ordered_json{{"fraction", split->fraction}, {"seed", split->seed}};
  }
  doc["output_dir"] = output_dir.string();
  return doc.dump(2) + "\n";
}

std::vector<std::string> config_diff(const std::string& a_json, const std::string& b_json) {
  const nlohmann::json a = parse_object(a_json, "left config");
  const nlohmann::json b = parse_object(b_json, "right config");

  std::vector<std::pair<std::string, nlohmann::json>> a_flat;
  std::vector<std::pair<std::string, nlohmann::json>> b_flat;
  flatten(a, "", a_flat);
  flatten(b, "", b_flat);

  std::vector<std::string> changed;
  for (const auto& [key, value] : a_flat) {
    const auto it = std::find_if(b_flat.begin(), b_flat.end(),
                                 [&key](const auto& kv) { return kv.first == key; });
    if (it == b_flat.end() || it->second != value) changed.push_back(key);
  }
  for (const auto& [key, value] : b_flat) {
    const auto it = std::find_if(a_flat.begin(), a_flat.end(),
                                 [&key](const auto& kv) { return kv.first == key; });
    if (it == a_flat.end()) changed.push_back(key);
  }
  std::sort(changed.begin(), changed.end());
  changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
  return changed;
}

std::filesystem::path default_home() {
  if (const char* home = std::getenv("LRL_TAGGER_HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home);
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".lrl-tagger";
  }
  return std::filesystem::path(".lrl-tagger");
}

std::filesystem::path resolve_bundle_dir(const std::string& name_or_path) {
  const std::filesystem::path given(name_or_path);
  if (given.has_parent_path() || std::filesystem::exists(given)) return given;
  return default_home() / given;
}

}  // namespace lrltag
