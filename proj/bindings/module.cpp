// Python bindings for the tagging toolkit (module lrltag._core).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>

#include "lrltag/alignment.hpp"
#include "lrltag/backend.hpp"
#include "lrltag/corpus.hpp"
#include "lrltag/digest.hpp"
#include "lrltag/errors.hpp"
#include "lrltag/evaluation.hpp"
#include "lrltag/io.hpp"
#include "lrltag/labels.hpp"
#include "lrltag/run_config.hpp"
#include "lrltag/tagger.hpp"

namespace py = pybind11;
using namespace lrltag;

namespace {

/// Lets python classes implement the backend contract and plug into
/// TrainedTagger.assemble.
class PyTaggingModel : public TaggingModel, public py::trampoline_self_life_support {
public:
  using TaggingModel::TaggingModel;

  std::string backend_id() const override {
    PYBIND11_OVERRIDE_PURE(std::string, TaggingModel, backend_id);
  }
  std::size_t num_labels() const override {
    PYBIND11_OVERRIDE_PURE(std::size_t, TaggingModel, num_labels);
  }
  std::vector<std::string> predict_word_tags(const std::vector<std::string>& words,
                                             const TagCodec& codec) const override {
    PYBIND11_OVERRIDE_PURE(std::vector<std::string>, TaggingModel, predict_word_tags, words,
                           codec);
  }
  void save_state(const std::filesystem::path& backend_dir) const override {
    PYBIND11_OVERRIDE_PURE(void, TaggingModel, save_state, backend_dir);
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "POS tagging toolkit for low-resource languages";

  // Exceptions: specific types are registered after the base so their
  // translators run first; python sees a proper hierarchy under Error.
  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<MalformedLine>(m, "MalformedLine", error.ptr());
  py::register_exception<EmptyCorpus>(m, "EmptyCorpus", error.ptr());
  py::register_exception<LengthMismatch>(m, "LengthMismatch", error.ptr());
  py::register_exception<DegenerateSplit>(m, "DegenerateSplit", error.ptr());
  py::register_exception<EmptyTagset>(m, "EmptyTagset", error.ptr());
  py::register_exception<UnknownTag>(m, "UnknownTag", error.ptr());
  py::register_exception<UnknownId>(m, "UnknownId", error.ptr());
  py::register_exception<IoFailure>(m, "IoFailure", error.ptr());
  py::register_exception<SchemaMismatch>(m, "SchemaMismatch", error.ptr());
  py::register_exception<InconsistentTokenization>(m, "InconsistentTokenization", error.ptr());
  py::register_exception<CodecCoverageError>(m, "CodecCoverageError", error.ptr());
  py::register_exception<BackendUnavailable>(m, "BackendUnavailable", error.ptr());
  py::register_exception<ModelNotTrained>(m, "ModelNotTrained", error.ptr());
  py::register_exception<EmptyInput>(m, "EmptyInput", error.ptr());
  py::register_exception<BundleCorrupt>(m, "BundleCorrupt", error.ptr());
  py::register_exception<VersionMismatch>(m, "VersionMismatch", error.ptr());
  py::register_exception<UnsupportedFormat>(m, "UnsupportedFormat", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());

  // Corpus model.
  py::class_<TaggedSentence>(m, "TaggedSentence")
      .def(py::init<>())
      .def(py::init([](std::vector<std::string> words, std::vector<std::string> tags) {
             TaggedSentence s;
             s.words = std::move(words);
             s.tags = std::move(tags);
             return s;
           }),
           py::arg("words"), py::arg("tags"))
      .def_readwrite("words", &TaggedSentence::words)
      .def_readwrite("tags", &TaggedSentence::tags)
      .def("__len__", [](const TaggedSentence& s) { return s.words.size(); })
      .def("__eq__", [](const TaggedSentence& a, const TaggedSentence& b) { return a == b; });

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def_readonly("sentences", &Corpus::sentences)
      .def_readonly("tagset", &Corpus::tagset)
      .def("token_count", &Corpus::token_count)
      .def("__len__", [](const Corpus& c) { return c.sentences.size(); })
      .def("__eq__", [](const Corpus& a, const Corpus& b) { return a == b; });

  py::class_<TagDistribution>(m, "TagDistribution")
      .def_readonly("counts", &TagDistribution::counts)
      .def_readonly("fractions", &TagDistribution::fractions)
      .def_readonly("total", &TagDistribution::total);

  m.def("make_corpus", &make_corpus, py::arg("sentences"));
  m.def("parse_two_column", &parse_two_column, py::arg("text"),
        py::arg("delimiter") = kTabDelimiter);
  m.def("serialize_two_column", &serialize_two_column, py::arg("corpus"),
        py::arg("delimiter") = kTabDelimiter);
  m.def("normalize_parallel", &normalize_parallel, py::arg("sentence_text"), py::arg("tag_text"));
  m.def("parse_parallel", &parse_parallel, py::arg("text"), py::arg("delimiter") = kTabDelimiter);
  m.def("split_train_test", &split_train_test, py::arg("corpus"),
        py::arg("train_fraction") = 0.8, py::arg("seed") = 0);
  m.def("tag_distribution", &tag_distribution, py::arg("corpus"));
  m.def("distribution_csv", &distribution_csv, py::arg("dist"));
  m.def("top2_share", &top2_share, py::arg("dist"));
  m.def("split_whitespace", &split_whitespace, py::arg("text"));
  m.def("format_fixed", &format_fixed, py::arg("value"), py::arg("places"));
  m.def("read_text_file", &read_text_file, py::arg("path"));
  m.def("write_text_file", &write_text_file, py::arg("path"), py::arg("content"));
  m.def("sha256_hex", &sha256_hex, py::arg("bytes"));

  // Labels.
  py::class_<TagCodec>(m, "TagCodec")
      .def_static("fit", &TagCodec::fit, py::arg("tagset"),
                  py::arg("ignore_id") = kDefaultIgnoreId)
      .def("encode", &TagCodec::encode, py::arg("tag"))
      .def("decode", &TagCodec::decode, py::arg("id"))
      .def("contains", &TagCodec::contains, py::arg("tag"))
      .def("__contains__", &TagCodec::contains)
      .def("__len__", &TagCodec::size)
      .def_property_readonly("ignore_id", &TagCodec::ignore_id)
      .def_property_readonly("tags", &TagCodec::tags)
      .def("to_json", &TagCodec::to_json)
      .def_static("from_json", &TagCodec::from_json, py::arg("text"))
      .def("save", &TagCodec::save, py::arg("path"))
      .def_static("load", &TagCodec::load, py::arg("path"))
      .def("__eq__", [](const TagCodec& a, const TagCodec& b) { return a == b; });

  // Alignment.
  m.attr("NO_WORD") = kNoWord;
  py::class_<SubwordTokenization>(m, "SubwordTokenization")
      .def(py::init<>())
      .def(py::init([](std::vector<std::string> tokens, std::vector<int> word_index) {
             SubwordTokenization t;
             t.tokens = std::move(tokens);
             t.word_index = std::move(word_index);
             return t;
           }),
           py::arg("tokens"), py::arg("word_index"))
      .def_readwrite("tokens", &SubwordTokenization::tokens)
      .def_readwrite("word_index", &SubwordTokenization::word_index)
      .def("__len__", &SubwordTokenization::size)
      .def("__eq__",
           [](const SubwordTokenization& a, const SubwordTokenization& b) { return a == b; });

  py::class_<AlignedExample>(m, "AlignedExample")
      .def_readonly("tokenization", &AlignedExample::tokenization)
      .def_readonly("label_ids", &AlignedExample::label_ids);

  m.def("validate_tokenization", &validate_tokenization, py::arg("tokenization"),
        py::arg("word_count"));
  m.def("first_subword_mask", &first_subword_mask, py::arg("tokenization"));
  m.def("align_labels", &align_labels, py::arg("sentence"), py::arg("tokenization"),
        py::arg("codec"));
  m.def("collapse_predictions", &collapse_predictions, py::arg("predicted_ids"),
        py::arg("tokenization"), py::arg("codec"));
  m.def("truncate_at_word_boundary", &truncate_at_word_boundary, py::arg("tokenization"),
        py::arg("max_tokens"));

  // Backends.
  py::enum_<BackendId>(m, "BackendId")
      .value("baseline", BackendId::baseline)
      .value("transformer", BackendId::transformer);

  py::class_<BackendConfig>(m, "BackendConfig")
      .def(py::init<>())
      .def_readwrite("backend_id", &BackendConfig::backend_id)
      .def_readwrite("model_name", &BackendConfig::model_name)
      .def_readwrite("max_length", &BackendConfig::max_length)
      .def_readwrite("epochs", &BackendConfig::epochs)
      .def_readwrite("batch_size", &BackendConfig::batch_size)
      .def_readwrite("learning_rate", &BackendConfig::learning_rate)
      .def_readwrite("seed", &BackendConfig::seed)
      .def("to_json", &BackendConfig::to_json)
      .def_static("from_json", &BackendConfig::from_json, py::arg("text"))
      .def("__eq__", [](const BackendConfig& a, const BackendConfig& b) { return a == b; });

  // classh (smart holder) keeps the Python half of a plug-in model alive for
  // as long as the C++ side holds the shared_ptr; a plain shared_ptr holder
  // would drop Python-implemented overrides once the last Python reference
  // goes away.
  py::classh<TaggingModel, PyTaggingModel>(m, "TaggingModel")
      .def(py::init<>())
      .def("backend_id", &TaggingModel::backend_id)
      .def("num_labels", &TaggingModel::num_labels)
      .def("predict_word_tags", &TaggingModel::predict_word_tags, py::arg("words"),
           py::arg("codec"))
      .def("save_state", &TaggingModel::save_state, py::arg("backend_dir"));

  m.def("backend_available", &backend_available, py::arg("backend_id"));
  m.def("masked_cross_entropy", &masked_cross_entropy, py::arg("logits"), py::arg("labels"),
        py::arg("ignore_id") = kDefaultIgnoreId);
  m.def("masked_cross_entropy_grad", &masked_cross_entropy_grad, py::arg("logits"),
        py::arg("labels"), py::arg("ignore_id") = kDefaultIgnoreId);

  // Tagger facade.
  py::class_<TrainedTagger>(m, "TrainedTagger")
      .def_static("fit", &TrainedTagger::fit, py::arg("corpus"), py::arg("config"))
      .def_static(
          "assemble",
          [](TagCodec codec, std::shared_ptr<TaggingModel> model, BackendConfig config) {
            return TrainedTagger::assemble(std::move(codec),
                                           std::shared_ptr<const TaggingModel>(std::move(model)),
                                           std::move(config));
          },
          py::arg("codec"), py::arg("model"), py::arg("config"))
      .def("predict",
           py::overload_cast<const std::vector<std::string>&>(&TrainedTagger::predict,
                                                              py::const_),
           py::arg("words"))
      .def("predict",
           py::overload_cast<const std::string&>(&TrainedTagger::predict, py::const_),
           py::arg("text"))
      .def("predict_tags", &TrainedTagger::predict_tags, py::arg("words"))
      .def("save", &TrainedTagger::save, py::arg("directory"))
      .def_static("load", &TrainedTagger::load, py::arg("directory"))
      .def_static("load_pretrained", &TrainedTagger::load_pretrained, py::arg("directory"))
      .def_property_readonly("codec", &TrainedTagger::codec)
      .def_property_readonly("config", &TrainedTagger::config);

  // Evaluation.
  py::class_<ClassMetrics>(m, "ClassMetrics")
      .def_readonly("precision", &ClassMetrics::precision)
      .def_readonly("recall", &ClassMetrics::recall)
      .def_readonly("f1", &ClassMetrics::f1)
      .def_readonly("support", &ClassMetrics::support);

  py::class_<SummaryMetrics>(m, "SummaryMetrics")
      .def_readonly("precision", &SummaryMetrics::precision)
      .def_readonly("recall", &SummaryMetrics::recall)
      .def_readonly("f1", &SummaryMetrics::f1);

  py::class_<EvaluationReport>(m, "EvaluationReport")
      .def_readonly("classes", &EvaluationReport::classes)
      .def_readonly("per_class", &EvaluationReport::per_class)
      .def_readonly("has_other_column", &EvaluationReport::has_other_column)
      .def_readonly("confusion", &EvaluationReport::confusion)
      .def_readonly("accuracy", &EvaluationReport::accuracy)
      .def_readonly("macro_avg", &EvaluationReport::macro_avg)
      .def_readonly("weighted_avg", &EvaluationReport::weighted_avg)
      .def_readonly("total_support", &EvaluationReport::total_support)
      .def("metrics_for", &EvaluationReport::metrics_for, py::arg("tag"),
           py::return_value_policy::reference_internal)
      .def("column_names", &EvaluationReport::column_names);

  py::enum_<ImageFormat>(m, "ImageFormat")
      .value("png", ImageFormat::png)
      .value("svg", ImageFormat::svg)
      .value("csv", ImageFormat::csv);

  m.def("evaluate", &evaluate, py::arg("gold"), py::arg("pred"), py::arg("codec"));
  m.def("evaluate_tagger", &evaluate_tagger, py::arg("tagger"), py::arg("test"));
  m.def("render_report", &render_report, py::arg("report"));
  m.def("report_csv", &report_csv, py::arg("report"));
  m.def("export_report_csv", &export_report_csv, py::arg("report"), py::arg("path"));
  m.def("confusion_csv", &confusion_csv, py::arg("report"));
  m.def("render_confusion", &render_confusion, py::arg("report"), py::arg("path"),
        py::arg("format"));
  m.def("render_distribution_chart", &render_distribution_chart, py::arg("dist"),
        py::arg("path"), py::arg("format"));
  m.def("image_format_from_string", &image_format_from_string, py::arg("name"));

  // Run configuration.
  m.def("config_diff", &config_diff, py::arg("a_json"), py::arg("b_json"));
  m.def("default_home", &default_home);
  m.def("resolve_bundle_dir", &resolve_bundle_dir, py::arg("name_or_path"));
}
