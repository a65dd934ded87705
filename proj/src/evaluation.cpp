#include "lrltag/evaluation.hpp"

#include <algorithm>
#include <sstream>

#include "lrltag/errors.hpp"
#include "lrltag/io.hpp"

namespace lrltag {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double f1_of(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

}  // namespace

const ClassMetrics& EvaluationReport::metrics_for(const std::string& tag) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == tag) return per_class[i];
  }
  throw UnknownTag(tag);
}

std::vector<std::string> EvaluationReport::column_names() const {
  std::vector<std::string> names = classes;
  if (has_other_column) names.push_back(kOtherColumn);
  return names;
}

EvaluationReport evaluate(const std::vector<std::string>& gold,
                          const std::vector<std::string>& pred, const TagCodec& codec) {
  if (gold.size() != pred.size()) throw LengthMismatch(gold.size(), pred.size());
  if (gold.empty()) throw EmptyInput("nothing to evaluate");

  const std::size_t n = codec.size();
  EvaluationReport report;
  report.classes = codec.tags();

  // Predictions outside the codec share one extra column.
  std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n + 1, 0));
  bool saw_other = false;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const std::size_t row = static_cast<std::size_t>(codec.encode(gold[i]));
    std::size_t col = n;
    if (codec.contains(pred[i])) {
      col = static_cast<std::size_t>(codec.encode(pred[i]));
    } else {
      saw_other = true;
    }
    ++counts[row][col];
  }

  report.has_other_column = saw_other;
  const std::size_t cols = saw_other ? n + 1 : n;
  report.confusion.assign(n, std::vector<std::size_t>(cols, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < cols; ++c) report.confusion[r][c] = counts[r][c];
  }

  std::size_t correct = 0;
  report.per_class.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t tp = counts[k][k];
    std::size_t row_sum = 0;
    std::size_t col_sum = 0;
    for (std::size_t c = 0; c <= n; ++c) row_sum += counts[k][c];
    for (std::size_t r = 0; r < n; ++r) col_sum += counts[r][k];
    ClassMetrics& m = report.per_class[k];
    m.support = row_sum;
    m.precision = ratio(tp, col_sum);
    m.recall = ratio(tp, row_sum);
    m.f1 = f1_of(m.precision, m.recall);
    correct += tp;
  }

  report.total_support = gold.size();
  report.accuracy = ratio(correct, gold.size());

  // Macro averages run over classes that actually occur in the gold data.
  std::size_t present = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const ClassMetrics& m = report.per_class[k];
    if (m.support == 0) continue;
    ++present;
    report.macro_avg.precision += m.precision;
    report.macro_avg.recall += m.recall;
    report.macro_avg.f1 += m.f1;
    report.weighted_avg.precision += m.precision * static_cast<double>(m.support);
    report.weighted_avg.recall += m.recall * static_cast<double>(m.support);
    report.weighted_avg.f1 += m.f1 * static_cast<double>(m.support);
  }
  if (present > 0) {
    report.macro_avg.precision /= static_cast<double>(present);
    report.macro_avg.recall /= static_cast<double>(present);
    report.macro_avg.f1 /= static_cast<double>(present);
  }
  const double total = static_cast<double>(report.total_support);
  report.weighted_avg.precision /= total;
  report.weighted_avg.recall /= total;
  report.weighted_avg.f1 /= total;
  return report;
}

EvaluationReport evaluate_tagger(const TrainedTagger& tagger, const Corpus& test) {
  if (test.sentences.empty()) throw EmptyCorpus();
  std::vector<std::string> gold;
  std::vector<std::string> pred;
  gold.reserve(test.token_count());
  pred.reserve(test.token_count());
  for (const TaggedSentence& sentence : test.sentences) {
    const std::vector<std::string> tags = tagger.predict_tags(sentence.words);
    gold.insert(gold.end(), sentence.tags.begin(), sentence.tags.end());
    pred.insert(pred.end(), tags.begin(), tags.end());
  }
  return evaluate(gold, pred, tagger.codec());
}

std::string render_report(const EvaluationReport& report) {
  std::size_t name_width = std::string("weighted avg").size();
  for (const std::string& tag : report.classes) name_width = std::max(name_width, tag.size());

  std::ostringstream out;
  auto pad = [&](const std::string& text, std::size_t width) {
    out << std::string(width > text.size() ? width - text.size() : 0, ' ') << text;
  };
  auto row = [&](const std::string& name, const std::string& p, const std::string& r,
                 const std::string& f, const std::string& s) {
    pad(name, name_width);
    pad(p, 11);
    pad(r, 8);
    pad(f, 10);
    pad(s, 9);
    out << '\n';
  };

  row("", "precision", "recall", "f1-score", "support");
  out << '\n';
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const ClassMetrics& m = report.per_class[k];
    row(report.classes[k], format_fixed(m.precision, 2), format_fixed(m.recall, 2),
        format_fixed(m.f1, 2), std::to_string(m.support));
  }
  out << '\n';
  row("accuracy", "", "", format_fixed(report.accuracy, 4), std::to_string(report.total_support));
  row("macro avg", format_fixed(report.macro_avg.precision, 2),
      format_fixed(report.macro_avg.recall, 2), format_fixed(report.macro_avg.f1, 2),
      std::to_string(report.total_support));
  row("weighted avg", format_fixed(report.weighted_avg.precision, 2),
      format_fixed(report.weighted_avg.recall, 2), format_fixed(report.weighted_avg.f1, 2),
      std::to_string(report.total_support));
  return out.str();
}

std::string report_csv(const EvaluationReport& report) {
  std::ostringstream out;
  out << "class,precision,recall,f1,support\n";
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const ClassMetrics& m = report.per_class[k];
    out << report.classes[k] << ',' << format_fixed(m.precision, 6) << ','
        << format_fixed(m.recall, 6) << ',' << format_fixed(m.f1, 6) << ',' << m.support << '\n';
  }
  // Accuracy sits in the f1 column, mirroring the usual report layout.
  out << "__accuracy__,,," << format_fixed(report.accuracy, 6) << ',' << report.total_support
      << '\n';
  out << "__macro__," << format_fixed(report.macro_avg.precision, 6) << ','
      << format_fixed(report.macro_avg.recall, 6) << ',' << format_fixed(report.macro_avg.f1, 6)
      << ',' << report.total_support << '\n';
  out << "__weighted__," << format_fixed(report.weighted_avg.precision, 6) << ','
      << format_fixed(report.weighted_avg.recall, 6) << ','
      << format_fixed(report.weighted_avg.f1, 6) << ',' << report.total_support << '\n';
  return out.str();
}

void export_report_csv(const EvaluationReport& report, const std::filesystem::path& path) {
  write_text_file(path, report_csv(report));
}

ImageFormat image_format_from_string(const std::string& name) {
  if (name == "png") return ImageFormat::png;
  if (name == "svg") return ImageFormat::svg;
  if (name == "csv") return ImageFormat::csv;
  throw UnsupportedFormat(name);
}

std::string confusion_csv(const EvaluationReport& report) {
  std::ostringstream out;
  const std::vector<std::string> cols = report.column_names();
  for (const std::string& name : cols) out << ',' << name;
  out << '\n';
  for (std::size_t r = 0; r < report.confusion.size(); ++r) {
    out << report.classes[r];
    for (std::size_t c = 0; c < cols.size(); ++c) out << ',' << report.confusion[r][c];
    out << '\n';
  }
  return out.str();
}

}  // namespace lrltag
