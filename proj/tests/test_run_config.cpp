#include <doctest.h>

#include <cstdlib>

#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"
#include "lrltag/run_config.hpp"
#include "support.hpp"

using namespace lrltag;

namespace {

const std::string kSplitConfig = R"({
  "language": "demo",
  "train_path": "data/train.tsv",
  "format": "two_column",
  "backend": {"backend_id": "baseline", "model_name": ""},
  "split": {"fraction": 0.8, "seed": 42},
  "output_dir": "runs"
})";

/// Scoped environment variable override.
struct EnvGuard {
  std::string name;
  std::string saved;
  bool had = false;

  EnvGuard(const std::string& var, const char* value) : name(var) {
    if (const char* old = std::getenv(var.c_str())) {
      had = true;
      saved = old;
    }
    if (value == nullptr) {
      unsetenv(var.c_str());
    } else {
      setenv(var.c_str(), value, 1);
    }
  }
  ~EnvGuard() {
    if (had) {
      setenv(name.c_str(), saved.c_str(), 1);
    } else {
      unsetenv(name.c_str());
    }
  }
};

}  // namespace

TEST_CASE("run config parses the full schema") {
  const RunConfig config = RunConfig::from_json(kSplitConfig);
  CHECK(config.language == "demo");
  CHECK(config.train_path == "data/train.tsv");
  CHECK_FALSE(config.eval_path.has_value());
  CHECK(config.format == CorpusFormat::two_column);
  CHECK(config.backend.backend_id == BackendId::baseline);
  REQUIRE(config.split.has_value());
  CHECK(config.split->fraction == doctest::Approx(0.8));
  CHECK(config.split->seed == 42);
  CHECK(config.output_dir == "runs");
}

TEST_CASE("evaluation data must come from exactly one source") {
  CHECK_THROWS_AS(RunConfig::from_json(R"({
    "language": "x", "train_path": "t.tsv",
    "backend": {"backend_id": "baseline"},
    "output_dir": "runs"
  })"),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({
    "language": "x", "train_path": "t.tsv", "eval_path": "e.tsv",
    "backend": {"backend_id": "baseline"},
    "split": {"fraction": 0.5, "seed": 1},
    "output_dir": "runs"
  })"),
                  ConfigError);
}

TEST_CASE("run config rejects unknown keys and bad values") {
  CHECK_THROWS_AS(RunConfig::from_json("[]"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json("{"), ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({
    "language": "x", "train_path": "t.tsv", "eval_path": "e.tsv",
    "backend": {"backend_id": "baseline"},
    "output_dir": "runs", "typo_key": 1
  })"),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({
    "language": "", "train_path": "t.tsv", "eval_path": "e.tsv",
    "backend": {"backend_id": "baseline"}, "output_dir": "runs"
  })"),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({
    "language": "x", "train_path": "t.tsv",
    "backend": {"backend_id": "baseline"},
    "split": {"fraction": 1.5, "seed": 1}, "output_dir": "runs"
  })"),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({
    "language": "x", "train_path": "t.tsv", "eval_path": "e.tsv",
    "output_dir": "runs"
  })"),
                  ConfigError);
  CHECK_THROWS_AS(RunConfig::from_json(R"({
    "language": "x", "train_path": "t.tsv", "eval_path": "e.tsv",
    "backend": {"backend_id": "baseline"}, "format": "threecolumn",
    "output_dir": "runs"
  })"),
                  ConfigError);
}

TEST_CASE("load anchors relative paths at the config directory") {
  test::TempDir dir;
  write_text_file(dir.path / "conf" / "run.json", kSplitConfig);
  const RunConfig config = RunConfig::load(dir.path / "conf" / "run.json");
  CHECK(config.train_path == dir.path / "conf" / "data/train.tsv");
  CHECK(config.output_dir == dir.path / "conf" / "runs");
}

TEST_CASE("run config serialization round-trips") {
  const RunConfig config = RunConfig::from_json(kSplitConfig);
  const RunConfig back = RunConfig::from_json(config.to_json());
  CHECK(back.language == config.language);
  CHECK(back.train_path == config.train_path);
  CHECK(back.format == config.format);
  CHECK(back.backend == config.backend);
  CHECK(back.split == config.split);
  CHECK(back.output_dir == config.output_dir);
}

TEST_CASE("corpus format names round-trip") {
  CHECK(to_string(CorpusFormat::two_column) == "two_column");
  CHECK(to_string(CorpusFormat::parallel) == "parallel");
  CHECK(corpus_format_from_string("parallel") == CorpusFormat::parallel);
  CHECK_THROWS_AS(corpus_format_from_string("csv"), UnsupportedFormat);
}

TEST_CASE("config diff reports dotted paths of changed keys") {
  const std::string left = R"({
    "language": "bangla-shaped", "train_path": "a.tsv",
    "backend": {"backend_id": "baseline", "model_name": "m1", "epochs": 3},
    "output_dir": "runs"
  })";
  const std::string right = R"({
    "language": "hindi-shaped", "train_path": "b.tsv",
    "backend": {"backend_id": "baseline", "model_name": "m2", "epochs": 3},
    "output_dir": "runs"
  })";
  CHECK(config_diff(left, right) ==
        std::vector<std::string>{"backend.model_name", "language", "train_path"});
  CHECK(config_diff(left, left).empty());

  // Keys present on only one side count as differences.
  CHECK(config_diff(R"({"a":1})", R"({"a":1,"b":2})") == std::vector<std::string>{"b"});
  CHECK(config_diff(R"({"a":{"x":1}})", R"({"a":{}})") == std::vector<std::string>{"a.x"});
}

TEST_CASE("LRL_TAGGER_HOME overrides the default bundle cache") {
  {
    EnvGuard guard("LRL_TAGGER_HOME", "/tmp/lrltag-home");
    CHECK(default_home() == std::filesystem::path("/tmp/lrltag-home"));
    CHECK(resolve_bundle_dir("my-bundle") ==
          std::filesystem::path("/tmp/lrltag-home") / "my-bundle");
    // Explicit paths are never redirected.
    CHECK(resolve_bundle_dir("./here/bundle") == std::filesystem::path("./here/bundle"));
  }
  {
    EnvGuard home_guard("HOME", "/tmp/some-user");
    EnvGuard guard("LRL_TAGGER_HOME", nullptr);
    CHECK(default_home() == std::filesystem::path("/tmp/some-user") / ".lrl-tagger");
  }
}
