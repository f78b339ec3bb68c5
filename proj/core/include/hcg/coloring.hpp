#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hcg {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// A k-coloring: one color in [0, num_colors) per vertex. Colors are 0-based;
// color i here is color i+1 in the usual 1-based [k] notation.
class Coloring {
 public:
  // Throws InvalidParams when num_colors == 0 and ColorOutOfRange when an
  // entry is >= num_colors.
  Coloring(std::uint32_t num_colors, std::vector<Color> colors);

  static Coloring uniform(std::uint32_t num_colors, std::size_t num_vertices,
                          Color color = 0);

  std::uint32_t num_colors() const noexcept { return num_colors_; }
  std::size_t size() const noexcept { return colors_.size(); }
  Color operator[](Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  // Copy with v recolored to `color`.
  Coloring with(Vertex v, Color color) const;
  void set(Vertex v, Color color);

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& a, const Coloring& b) {
    return a.colors_ <=> b.colors_;
  }

 private:
  std::uint32_t num_colors_;
  std::vector<Color> colors_;
};

}  // namespace hcg
