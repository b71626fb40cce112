#include <gtest/gtest.h>

#include <regex>

#include "inctab/enumeration.hpp"
#include "inctab/io.hpp"
#include "inctab/render.hpp"
#include "oracles.hpp"

using namespace inctab;

TEST(RenderText, StaircaseLayout) {
  const auto t = parse_tableau(oracle::slurp(oracle::data_path("promote_2x3_q6.txt")));
  const auto text = render_growth_text(growth_diagram(t, 0, 2));
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].rfind("(),", 0), 0u);
  const auto indent = lines[1].find('(');
  EXPECT_GT(indent, 0u);
  EXPECT_EQ(lines[2].find('('), 2 * indent);
}

TEST(RenderText, ForcedTableauRowsRepeat) {
  const auto t = enumerate_all({Shape::rectangle(2, 3), 4}).at(0);
  const auto text = render_growth_text(growth_diagram(t, 0, 3));
  std::istringstream in(text);
  std::string first, line;
  std::getline(in, first);
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(' ');
    EXPECT_EQ(line.substr(start), first);
  }
}

TEST(RenderSvg, OneGroupPerCellAndShading) {
  const auto t = parse_tableau(oracle::slurp(oracle::data_path("growth_4x4_q11.tab")));
  const auto gd = growth_diagram(t, 0, 11);
  const auto svg = render_growth_svg(gd, Box{2, 4});
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const std::regex group("<g class=\"cell( shaded)?\"");
  const std::regex shaded("<g class=\"cell shaded\"");
  const auto n_groups = std::distance(std::sregex_iterator(svg.begin(), svg.end(), group), std::sregex_iterator());
  const auto n_shaded = std::distance(std::sregex_iterator(svg.begin(), svg.end(), shaded), std::sregex_iterator());
  EXPECT_EQ(n_groups, 12 * 12);
  int expected = 0;
  for (int j = 0; j <= 11; ++j)
    for (int i = 0; i <= 11; ++i) expected += gd.cell(i, j).contains({2, 4}) ? 1 : 0;
  EXPECT_EQ(n_shaded, expected);
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '<') - std::count(svg.begin(), svg.end(), '>'), 0);
}
