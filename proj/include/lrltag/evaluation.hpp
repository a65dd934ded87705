#ifndef LRLTAG_EVALUATION_HPP
#define LRLTAG_EVALUATION_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "lrltag/corpus.hpp"
#include "lrltag/labels.hpp"
#include "lrltag/tagger.hpp"

namespace lrltag {

/// One-vs-rest metrics for a single class. Zero denominators yield 0.
struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct SummaryMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Synthetic column absorbing predicted tags the codec does not know.
inline const std::string kOtherColumn = "OTHER";

/// Classification report over words: per-class metrics in codec order,
/// accuracy, macro and support-weighted averages, and the confusion matrix
/// (rows gold, columns predicted; a trailing OTHER column appears when some
/// prediction was outside the codec).
struct EvaluationReport {
  std::vector<std::string> classes;
  std::vector<ClassMetrics> per_class;
  bool has_other_column = false;
  std::vector<std::vector<std::size_t>> confusion;
  double accuracy = 0.0;
  SummaryMetrics macro_avg;
  SummaryMetrics weighted_avg;
  std::size_t total_support = 0;

  const ClassMetrics& metrics_for(const std::string& tag) const;  // UnknownTag
  std::vector<std::string> column_names() const;
};

/// Scores predicted against gold tags. Gold tags must be known to the
/// codec; unknown predictions land in the OTHER column. Macro averages run
/// over classes with nonzero support. Throws LengthMismatch, EmptyInput,
/// UnknownTag.
EvaluationReport evaluate(const std::vector<std::string>& gold,
                          const std::vector<std::string>& pred, const TagCodec& codec);

/// Tags every test sentence, concatenates gold/predicted word-level tags
/// and delegates to evaluate. Throws EmptyCorpus.
EvaluationReport evaluate_tagger(const TrainedTagger& tagger, const Corpus& test);

/// Text table: one row per class (precision/recall/F1 to 2 decimals,
/// support), then accuracy (4 decimals), macro avg and weighted avg rows.
std::string render_report(const EvaluationReport& report);

/// CSV with header `class,precision,recall,f1,support` and summary rows
/// `__accuracy__`, `__macro__`, `__weighted__`; metrics to 6 decimals.
std::string report_csv(const EvaluationReport& report);
void export_report_csv(const EvaluationReport& report, const std::filesystem::path& path);

enum class ImageFormat { png, svg, csv };
ImageFormat image_format_from_string(const std::string& name);  // UnsupportedFormat

/// Confusion CSV: first row and first column carry the tag names.
std::string confusion_csv(const EvaluationReport& report);

/// Writes the confusion matrix as a heatmap (png/svg, counts annotated) or
/// as CSV. Throws IoFailure, UnsupportedFormat.
void render_confusion(const EvaluationReport& report, const std::filesystem::path& path,
                      ImageFormat format);

/// Writes a tag distribution bar chart (png or svg).
void render_distribution_chart(const TagDistribution& dist, const std::filesystem::path& path,
                               ImageFormat format);

}  // namespace lrltag

#endif
