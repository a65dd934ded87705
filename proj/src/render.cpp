// Chart output for evaluation reports and tag distributions (png/svg/csv).
#include <algorithm>
#include <sstream>

#include "lrltag/errors.hpp"
#include "lrltag/evaluation.hpp"
#include "lrltag/io.hpp"
#include "pixmap.hpp"

namespace lrltag {

namespace {

using detail::Color;
using detail::Pixmap;

constexpr Color kInk{33, 33, 33};
constexpr Color kWhite{255, 255, 255};
constexpr Color kBar{70, 114, 196};
constexpr int kPad = 10;
constexpr int kCellH = 26;

Color heat(double t) {
  // White to deep blue.
  auto mix = [&](int from, int to) {
    return static_cast<std::uint8_t>(from + (to - from) * t + 0.5);
  };
  return Color{mix(255, 33), mix(255, 102), mix(255, 172)};
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

std::string rgb_attr(Color c) {
  std::ostringstream out;
  out << "rgb(" << int(c.r) << ',' << int(c.g) << ',' << int(c.b) << ')';
  return out.str();
}

std::size_t max_confusion_count(const EvaluationReport& report) {
  std::size_t most = 0;
  for (const auto& row : report.confusion) {
    for (std::size_t v : row) most = std::max(most, v);
  }
  return most;
}

void confusion_png(const EvaluationReport& report, const std::filesystem::path& path) {
  const std::vector<std::string> cols = report.column_names();
  const std::vector<std::string>& rows = report.classes;
  const std::size_t most = max_confusion_count(report);

  int name_w = 0;
  for (const std::string& name : rows) name_w = std::max(name_w, detail::text_width(name));
  int cell_w = 40;
  for (const std::string& name : cols) {
    cell_w = std::max(cell_w, detail::text_width(name) + 8);
  }

  const int left = kPad + name_w + 6;
  const int top = kPad + detail::kGlyphHeight + 6;
  const int width = left + cell_w * static_cast<int>(cols.size()) + kPad;
  const int height = top + kCellH * static_cast<int>(rows.size()) + kPad;
  Pixmap img(width, height, kWhite);

  for (std::size_t c = 0; c < cols.size(); ++c) {
    const int cx = left + static_cast<int>(c) * cell_w;
    img.draw_text(cx + (cell_w - detail::text_width(cols[c])) / 2, kPad, cols[c], kInk);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int cy = top + static_cast<int>(r) * kCellH;
    img.draw_text(kPad + name_w - detail::text_width(rows[r]), cy + (kCellH - 7) / 2, rows[r],
                  kInk);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const int cx = left + static_cast<int>(c) * cell_w;
      const std::size_t count = report.confusion[r][c];
      const double t = most == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(most);
      img.fill_rect(cx + 1, cy + 1, cell_w - 2, kCellH - 2, heat(t));
      const std::string label = std::to_string(count);
      const Color ink = t > 0.55 ? kWhite : kInk;
      img.draw_text(cx + (cell_w - detail::text_width(label)) / 2, cy + (kCellH - 7) / 2, label,
                    ink);
    }
  }
  img.write_png(path);
}

void confusion_svg(const EvaluationReport& report, const std::filesystem::path& path) {
  const std::vector<std::string> cols = report.column_names();
  const std::vector<std::string>& rows = report.classes;
  const std::size_t most = max_confusion_count(report);

  std::size_t longest = 0;
  for (const std::string& name : rows) longest = std::max(longest, name.size());
  const int char_w = 8;
  const int left = kPad + static_cast<int>(longest) * char_w + 8;
  int cell_w = 48;
  for (const std::string& name : cols) {
    cell_w = std::max(cell_w, static_cast<int>(name.size()) * char_w + 10);
  }
  const int cell_h = 30;
  const int top = kPad + 20;
  const int width = left + cell_w * static_cast<int>(cols.size()) + kPad;
  const int height = top + cell_h * static_cast<int>(rows.size()) + kPad;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"monospace\" font-size=\"13\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const int cx = left + static_cast<int>(c) * cell_w + cell_w / 2;
    svg << "  <text x=\"" << cx << "\" y=\"" << kPad + 12
        << "\" text-anchor=\"middle\" fill=\"" << rgb_attr(kInk) << "\">" << xml_escape(cols[c])
        << "</text>\n";
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int cy = top + static_cast<int>(r) * cell_h;
    svg << "  <text x=\"" << left - 6 << "\" y=\"" << cy + cell_h / 2 + 4
        << "\" text-anchor=\"end\" fill=\"" << rgb_attr(kInk) << "\">" << xml_escape(rows[r])
        << "</text>\n";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const int cx = left + static_cast<int>(c) * cell_w;
      const std::size_t count = report.confusion[r][c];
      const double t = most == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(most);
      svg << "  <rect x=\"" << cx + 1 << "\" y=\"" << cy + 1 << "\" width=\"" << cell_w - 2
          << "\" height=\"" << cell_h - 2 << "\" fill=\"" << rgb_attr(heat(t)) << "\"/>\n";
      svg << "  <text x=\"" << cx + cell_w / 2 << "\" y=\"" << cy + cell_h / 2 + 4
          << "\" text-anchor=\"middle\" fill=\"" << rgb_attr(t > 0.55 ? kWhite : kInk) << "\">"
          << count << "</text>\n";
    }
  }
  svg << "</svg>\n";
  write_text_file(path, svg.str());
}

/// Distribution entries ordered by descending count, ties by tag.
std::vector<std::pair<std::string, std::size_t>> ordered_counts(const TagDistribution& dist) {
  std::vector<std::pair<std::string, std::size_t>> entries(dist.counts.begin(),
                                                           dist.counts.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return entries;
}

void distribution_png(const TagDistribution& dist, const std::filesystem::path& path) {
  const auto entries = ordered_counts(dist);
  std::size_t most = 1;
  for (const auto& [tag, count] : entries) most = std::max(most, count);

  int bar_w = 34;
  for (const auto& [tag, count] : entries) {
    bar_w = std::max({bar_w, detail::text_width(tag) + 8,
                      detail::text_width(std::to_string(count)) + 8});
  }
  const int chart_h = 160;
  const int top = kPad + detail::kGlyphHeight + 6;   // room for count labels
  const int bottom = kPad + detail::kGlyphHeight;    // room for tag labels
  const int width = kPad * 2 + bar_w * static_cast<int>(entries.size());
  const int height = top + chart_h + 6 + bottom;
  Pixmap img(width, height, kWhite);

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [tag, count] = entries[i];
    const int h = std::max(1, static_cast<int>(static_cast<double>(count) / most * chart_h + 0.5));
    const int x = kPad + static_cast<int>(i) * bar_w;
    const int y = top + chart_h - h;
    img.fill_rect(x + 3, y, bar_w - 6, h, kBar);
    const std::string label = std::to_string(count);
    img.draw_text(x + (bar_w - detail::text_width(label)) / 2, y - detail::kGlyphHeight - 2,
                  label, kInk);
    img.draw_text(x + (bar_w - detail::text_width(tag)) / 2, top + chart_h + 4, tag, kInk);
  }
  img.write_png(path);
}

void distribution_svg(const TagDistribution& dist, const std::filesystem::path& path) {
  const auto entries = ordered_counts(dist);
  std::size_t most = 1;
  for (const auto& [tag, count] : entries) most = std::max(most, count);

  const int char_w = 8;
  int bar_w = 44;
  for (const auto& [tag, count] : entries) {
    bar_w = std::max({bar_w, static_cast<int>(tag.size()) * char_w + 10,
                      static_cast<int>(std::to_string(count).size()) * char_w + 10});
  }
  const int chart_h = 200;
  const int top = kPad + 16;
  const int width = kPad * 2 + bar_w * static_cast<int>(entries.size());
  const int height = top + chart_h + 24 + kPad;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"monospace\" font-size=\"13\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [tag, count] = entries[i];
    const int h = std::max(1, static_cast<int>(static_cast<double>(count) / most * chart_h + 0.5));
    const int x = kPad + static_cast<int>(i) * bar_w;
    const int y = top + chart_h - h;
    const int center = x + bar_w / 2;
    svg << "  <rect x=\"" << x + 4 << "\" y=\"" << y << "\" width=\"" << bar_w - 8
        << "\" height=\"" << h << "\" fill=\"" << rgb_attr(kBar) << "\"/>\n";
    svg << "  <text x=\"" << center << "\" y=\"" << y - 4 << "\" text-anchor=\"middle\" fill=\""
        << rgb_attr(kInk) << "\">" << count << "</text>\n";
    svg << "  <text x=\"" << center << "\" y=\"" << top + chart_h + 16
        << "\" text-anchor=\"middle\" fill=\"" << rgb_attr(kInk) << "\">" << xml_escape(tag)
        << "</text>\n";
  }
  svg << "</svg>\n";
  write_text_file(path, svg.str());
}

}  // namespace

void render_confusion(const EvaluationReport& report, const std::filesystem::path& path,
                      ImageFormat format) {
  switch (format) {
    case ImageFormat::png: confusion_png(report, path); return;
    case ImageFormat::svg: confusion_svg(report, path); return;
    case ImageFormat::csv: write_text_file(path, confusion_csv(report)); return;
  }
  throw UnsupportedFormat("confusion render format");
}

void render_distribution_chart(const TagDistribution& dist, const std::filesystem::path& path,
                               ImageFormat format) {
  switch (format) {
    case ImageFormat::png: distribution_png(dist, path); return;
    case ImageFormat::svg: distribution_svg(dist, path); return;
    case ImageFormat::csv: write_text_file(path, distribution_csv(dist)); return;
  }
  throw UnsupportedFormat("distribution render format");
}

}  // namespace lrltag
