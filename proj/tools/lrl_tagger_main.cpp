// lrl-tagger: train, evaluate and run POS taggers from the command line.
//
// Exit codes: 0 success, 2 usage or data error, 3 backend unavailable.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "lrltag/corpus.hpp"
#include "lrltag/errors.hpp"
#include "lrltag/evaluation.hpp"
#include "lrltag/io.hpp"
#include "lrltag/run_config.hpp"
#include "lrltag/tagger.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBackend = 3;

lrltag::Corpus read_corpus(const std::filesystem::path& path, lrltag::CorpusFormat format) {
  const std::string text = lrltag::read_text_file(path);
  return format == lrltag::CorpusFormat::parallel ? lrltag::parse_parallel(text)
                                                  : lrltag::parse_two_column(text);
}

lrltag::ImageFormat format_from_extension(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".png") return lrltag::ImageFormat::png;
  if (ext == ".svg") return lrltag::ImageFormat::svg;
  if (ext == ".csv") return lrltag::ImageFormat::csv;
  throw lrltag::UnsupportedFormat("chart extension \"" + ext + "\" (use .png, .svg or .csv)");
}

struct ConvertArgs {
  std::string in;
  std::string format = "parallel";
  std::string out;
};

int cmd_convert(const ConvertArgs& args) {
  const lrltag::Corpus corpus = read_corpus(args.in, lrltag::corpus_format_from_string(args.format));
  lrltag::write_text_file(args.out, lrltag::serialize_two_column(corpus));
  std::cout << "sentences=" << corpus.sentences.size() << " tokens=" << corpus.token_count()
            << "\n";
  return kExitOk;
}

struct StatsArgs {
  std::string in;
  std::string format = "two_column";
  std::string csv;
  std::string chart;
};

int cmd_stats(const StatsArgs& args) {
  const lrltag::Corpus corpus = read_corpus(args.in, lrltag::corpus_format_from_string(args.format));
  const lrltag::TagDistribution dist = lrltag::tag_distribution(corpus);

  std::cout << lrltag::distribution_csv(dist);
  const double share = lrltag::top2_share(dist);
  std::cout << "top2_share=" << lrltag::format_fixed(share, 6) << "\n";
  if (share > 0.5) {
    std::cout << "note: top-2 share > 0.5 (two tags cover over half of all tokens)\n";
  }

  if (!args.csv.empty()) lrltag::write_text_file(args.csv, lrltag::distribution_csv(dist));
  if (!args.chart.empty()) {
    lrltag::render_distribution_chart(dist, args.chart, format_from_extension(args.chart));
  }
  return kExitOk;
}

struct TrainArgs {
  std::string config;
};

int cmd_train(const TrainArgs& args) {
  const lrltag::RunConfig config = lrltag::RunConfig::load(args.config);
  const lrltag::Corpus corpus = read_corpus(config.train_path, config.format);
  const std::filesystem::path run_dir = config.output_dir / config.language;

  lrltag::Corpus train = corpus;
  if (config.split) {
    auto [left, right] = lrltag::split_train_test(corpus, config.split->fraction,
                                                  config.split->seed);
    train = std::move(left);
    lrltag::write_text_file(run_dir / "heldout.tsv", lrltag::serialize_two_column(right));
  }

  const lrltag::TrainedTagger tagger = lrltag::TrainedTagger::fit(train, config.backend);
  const std::filesystem::path bundle_dir = run_dir / "bundle";
  tagger.save(bundle_dir);
  lrltag::write_text_file(run_dir / "run_config.json", config.to_json());

  std::cout << "bundle=" << bundle_dir.string() << "\n";
  std::cout << "language=" << config.language << " backend=" << to_string(config.backend.backend_id)
            << " sentences=" << train.sentences.size() << " tokens=" << train.token_count()
            << " tagset=" << train.tagset.size() << "\n";
  if (config.split) {
    std::cout << "heldout=" << (run_dir / "heldout.tsv").string() << "\n";
  }
  return kExitOk;
}

struct EvalArgs {
  std::string bundle;
  std::string in;
  std::string format = "two_column";
  std::string output_dir = ".";
  std::string confusion_image;
};

int cmd_eval(const EvalArgs& args) {
  const lrltag::TrainedTagger tagger =
      lrltag::TrainedTagger::load(lrltag::resolve_bundle_dir(args.bundle));
  const lrltag::Corpus test = read_corpus(args.in, lrltag::corpus_format_from_string(args.format));
  const lrltag::EvaluationReport report = lrltag::evaluate_tagger(tagger, test);

  std::cout << lrltag::render_report(report);

  const std::filesystem::path out_dir(args.output_dir);
  lrltag::export_report_csv(report, out_dir / "report.csv");
  lrltag::render_confusion(report, out_dir / "confusion.csv", lrltag::ImageFormat::csv);
  if (!args.confusion_image.empty()) {
    lrltag::render_confusion(report, args.confusion_image,
                             format_from_extension(args.confusion_image));
  }
  return kExitOk;
}

struct PredictArgs {
  std::string bundle;
  std::string text;
  std::string in;
};

int cmd_predict(const PredictArgs& args) {
  const lrltag::TrainedTagger tagger =
      lrltag::TrainedTagger::load(lrltag::resolve_bundle_dir(args.bundle));

  std::vector<std::string> sentences;
  if (!args.text.empty()) {
    sentences.push_back(args.text);
  } else {
    std::istringstream lines(lrltag::read_text_file(args.in));
    std::string line;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) sentences.push_back(line);
    }
  }
  if (sentences.empty()) throw lrltag::EmptyInput("no sentences to tag");

  bool first = true;
  for (const std::string& sentence : sentences) {
    if (!first) std::cout << "\n";
    first = false;
    for (const auto& [word, tag] : tagger.predict(sentence)) {
      std::cout << word << "\t" << tag << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"POS tagging toolkit for low-resource languages"};
  app.require_subcommand(1);

  ConvertArgs convert_args;
  CLI::App* convert = app.add_subcommand("convert", "Normalize a corpus to two-column format");
  convert->add_option("--in", convert_args.in, "Input corpus file")->required();
  convert->add_option("--format", convert_args.format, "Input format")
      ->check(CLI::IsMember({"parallel", "two_column"}));
  convert->add_option("--out", convert_args.out, "Output two-column file")->required();

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand("stats", "Print the tag distribution of a corpus");
  stats->add_option("--in", stats_args.in, "Input corpus file")->required();
  stats->add_option("--format", stats_args.format, "Input format")
      ->check(CLI::IsMember({"parallel", "two_column"}));
  stats->add_option("--csv", stats_args.csv, "Also write the distribution as CSV");
  stats->add_option("--chart", stats_args.chart, "Also write a bar chart (.png/.svg/.csv)");

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "Train a tagger and save its bundle");
  train->add_option("--config", train_args.config, "Run config JSON file")->required();

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a bundle against a tagged corpus");
  eval->add_option("--bundle", eval_args.bundle, "Bundle directory or name")->required();
  eval->add_option("--in", eval_args.in, "Tagged corpus to score against")->required();
  eval->add_option("--format", eval_args.format, "Input format")
      ->check(CLI::IsMember({"parallel", "two_column"}));
  eval->add_option("--output-dir", eval_args.output_dir,
                   "Where report.csv and confusion.csv are written");
  eval->add_option("--confusion-image", eval_args.confusion_image,
                   "Also render the confusion matrix (.png/.svg/.csv)");

  PredictArgs predict_args;
  CLI::App* predict = app.add_subcommand("predict", "Tag new text with a trained bundle");
  predict->add_option("--bundle", predict_args.bundle, "Bundle directory or name")->required();
  CLI::Option* text_opt = predict->add_option("--text", predict_args.text, "One sentence to tag");
  predict->add_option("--in", predict_args.in, "File with one sentence per line")
      ->excludes(text_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (convert->parsed()) return cmd_convert(convert_args);
    if (stats->parsed()) return cmd_stats(stats_args);
    if (train->parsed()) return cmd_train(train_args);
    if (eval->parsed()) return cmd_eval(eval_args);
    if (predict->parsed()) {
      if (predict_args.text.empty() && predict_args.in.empty()) {
        std::cerr << "error: predict needs --text or --in\n";
        return kExitUsage;
      }
      return cmd_predict(predict_args);
    }
  } catch (const lrltag::BackendUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const lrltag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
