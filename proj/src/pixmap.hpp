#ifndef LRLTAG_SRC_PIXMAP_HPP
#define LRLTAG_SRC_PIXMAP_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace lrltag::detail {

struct Color {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
};

/// Minimal RGB raster with a built-in 5x7 font, written out as PNG.
/// Just enough for chart rendering; not a general image library.
class Pixmap {
public:
  Pixmap(int width, int height, Color background);

  int width() const { return width_; }
  int height() const { return height_; }

  void set_pixel(int x, int y, Color color);
  void fill_rect(int x, int y, int w, int h, Color color);
  /// Uppercases letters; unknown glyphs render as a hollow box.
  void draw_text(int x, int y, const std::string& text, Color color, int scale = 1);

  void write_png(const std::filesystem::path& path) const;  // IoFailure

private:
  int width_;
  int height_;
  std::vector<std::uint8_t> rgb_;
};

/// Advance width of `text` drawn at `scale` (glyphs are 6px wide pre-scale).
int text_width(const std::string& text, int scale = 1);
inline constexpr int kGlyphAdvance = 6;
inline constexpr int kGlyphHeight = 7;

}  // namespace lrltag::detail

#endif
