#include "inctab/render.hpp"

#include <algorithm>
#include <sstream>

namespace inctab {

std::string render_growth_text(const GrowthDiagram& gd) {
  const int q = gd.ceiling();
  std::size_t width = 0;
  for (auto j = gd.j_min(); j <= gd.j_max(); ++j)
    for (int i = 0; i <= q; ++i) width = std::max(width, to_string(gd.cell(i, j)).size());
  const std::size_t step = width + 2;  // cell plus ", "

  std::ostringstream out;
  for (auto j = gd.j_min(); j <= gd.j_max(); ++j) {
    std::string line(static_cast<std::size_t>(j - gd.j_min()) * step, ' ');
    for (int i = 0; i <= q; ++i) {
      std::string cell = to_string(gd.cell(i, j));
      if (i < q) {
        cell += ",";
        cell.resize(step, ' ');
      }
      line += cell;
    }
    out << line << "\n";
  }
  return out.str();
}

std::string render_growth_svg(const GrowthDiagram& gd, std::optional<Box> shade) {
  const int q = gd.ceiling();
  int max_rows = 1;
  int max_cols = 1;
  for (auto j = gd.j_min(); j <= gd.j_max(); ++j) {
    const Partition& top = gd.cell(q, j);
    max_rows = std::max(max_rows, top.length());
    max_cols = std::max(max_cols, top.row(1));
  }
  constexpr int kBox = 6;
  constexpr int kPad = 8;
  const int cell_w = max_cols * kBox + kPad;
  const int cell_h = max_rows * kBox + kPad;
  const auto n_rows = gd.j_max() - gd.j_min() + 1;
  const auto n_cols = n_rows - 1 + q + 1;

  std::ostringstream out;
  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << n_cols * cell_w << R"(" height=")"
      << n_rows * cell_h << "\">\n";
  for (auto j = gd.j_min(); j <= gd.j_max(); ++j) {
    for (int i = 0; i <= q; ++i) {
      const Partition& p = gd.cell(i, j);
      const bool shaded = shade && p.contains(*shade);
      const auto x0 = (i + (j - gd.j_min())) * cell_w + kPad / 2;
      const auto y0 = (j - gd.j_min()) * cell_h + kPad / 2;
      out << "  <g class=\"cell" << (shaded ? " shaded" : "") << "\" data-i=\"" << i << "\" data-j=\"" << j
          << "\">";
      if (p.empty()) {
        out << "<circle cx=\"" << x0 + kBox / 2 << "\" cy=\"" << y0 + kBox / 2 << "\" r=\"" << kBox / 2
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.5\"/>";
      }
      for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.row(r); ++c)
          out << "<rect x=\"" << x0 + (c - 1) * kBox << "\" y=\"" << y0 + (r - 1) * kBox << "\" width=\"" << kBox
              << "\" height=\"" << kBox << "\" fill=\"" << (shaded ? "#87ceeb" : "white")
              << "\" stroke=\"black\" stroke-width=\"0.5\"/>";
      out << "</g>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace inctab
