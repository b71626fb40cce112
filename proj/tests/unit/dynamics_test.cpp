#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "inctab/dynamics.hpp"
#include "inctab/enumeration.hpp"
#include "inctab/errors.hpp"
#include "inctab/io.hpp"
#include "oracles.hpp"

using namespace inctab;

namespace {

constexpr int B = BulletFilling::kBullet;
using Rows = std::vector<std::vector<int>>;

IncreasingTableau load(const std::string& name) { return parse_tableau(oracle::slurp(oracle::data_path(name))); }

std::vector<std::vector<Partition>> load_growth(const std::string& name) {
  std::istringstream in(oracle::slurp(oracle::data_path(name)));
  std::vector<std::vector<Partition>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream cells(line);
    std::string cell;
    std::vector<Partition> row;
    while (cells >> cell) {
      if (cell[0] == '*') cell.erase(0, 1);
      const std::string inner = cell.substr(1, cell.size() - 2);
      std::vector<int> parts;
      std::istringstream ps(inner);
      std::string p;
      while (std::getline(ps, p, ',')) parts.push_back(std::stoi(p));
      row.emplace_back(parts);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<bool>> load_shading(const std::string& name) {
  std::istringstream in(oracle::slurp(oracle::data_path(name)));
  std::vector<std::vector<bool>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream cells(line);
    std::string cell;
    std::vector<bool> row;
    while (cells >> cell) row.push_back(cell[0] == '*');
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Promote, WorkedExampleOnTwoByThree) {
  const auto t = load("promote_2x3_q6.txt");
  EXPECT_EQ(promote(t).rows(), (Rows{{1, 3, 5}, {2, 5, 6}}));
}

TEST(Promote, TraceHasSevenStages) {
  const auto t = load("promote_2x3_q6.txt");
  std::vector<std::string> labels;
  std::vector<Rows> stages;
  promote(t, [&](std::string_view l, const BulletFilling& x) {
    labels.emplace_back(l);
    stages.push_back(x.rows());
  });
  EXPECT_EQ(labels, (std::vector<std::string>{"Rep_{1->*}", "swap_2", "swap_3", "swap_4", "swap_5", "swap_6",
                                              "Rep_{*->7}"}));
  const std::vector<Rows> expected{{{B, 2, 4}, {3, 4, 6}}, {{2, B, 4}, {3, 4, 6}}, {{2, B, 4}, {3, 4, 6}},
                                   {{2, 4, B}, {3, B, 6}}, {{2, 4, B}, {3, B, 6}}, {{2, 4, 6}, {3, 6, B}},
                                   {{2, 4, 6}, {3, 6, 7}}};
  EXPECT_EQ(stages, expected);
}

TEST(Promote, PartialStageIsATableauOfSmallerShape) {
  const BulletFilling x(Shape::rectangle(2, 3), 6, {{2, 4, 6}, {3, 6, B}});
  const auto out = remove_bullets(x);
  EXPECT_EQ(out.shape(), Shape(Partition({3, 2})));
  EXPECT_EQ(out.rows(), (Rows{{2, 4, 6}, {3, 6}}));
}

TEST(Promote, ForcedMinimalTableauIsFixed) {
  // q = m + n - 1 leaves exactly one tableau, T(i,j) = i + j - 1
  const auto all = enumerate_all({Shape::rectangle(3, 4), 6});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(promote(all[0]), all[0]);
}

TEST(Promote, OrbitOfFourByTenHasSize1222) {
  const auto t = load("orbit_4x10_q26.txt");
  EXPECT_EQ(orbit_size(t), 1222u);
}

TEST(Promote, PowerQOfFourByTenMovesOnlyTheInterior) {
  const auto t = load("orbit_4x10_q26.txt");
  const auto u = promote_power(t, 26);
  EXPECT_EQ(u.rows()[1], (std::vector<int>{2, 4, 6, 7, 10, 12, 14, 15, 19, 21}));
  for (int r : {0, 2, 3}) EXPECT_EQ(u.rows()[static_cast<std::size_t>(r)], t.rows()[static_cast<std::size_t>(r)]);
}

TEST(Promote, SkewShapesPromoteToo) {
  const IncreasingTableau t(Shape(Partition({3, 2}), Partition({1})), 5, {{1, 3}, {2, 4}});
  const auto p = promote(t);
  EXPECT_EQ(p.shape(), t.shape());
  EXPECT_EQ(promote_inverse(p), t);
}

TEST(Promote, InverseAndNegativePowers) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = oracle::random_tableau(rng, Shape::rectangle(3, 4), 9);
    EXPECT_EQ(promote_inverse(promote(t)), t);
    EXPECT_EQ(promote(promote_inverse(t)), t);
    EXPECT_EQ(promote_power(promote_power(t, 5), -5), t);
  }
  const auto t = load("promote_2x3_q6.txt");
  EXPECT_EQ(promote_power(t, 0), t);
}

TEST(Promote, AgreesWithClassicalPromotionOnStandardTableaux) {
  int checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : oracle::partitions(n))
      for (const auto& g : oracle::standard_tableaux(shape)) {
        const IncreasingTableau t(Shape(Partition(shape)), n, g);
        ASSERT_EQ(promote(t).rows(), oracle::classical_promotion(g));
        ++checked;
      }
  EXPECT_EQ(checked, 1 + 2 + 4 + 10 + 26 + 76 + 232);
}

TEST(Evacuation, GrowthDiagramExampleOnFourByFour) {
  const auto t = load("growth_4x4_q11.tab");
  const auto expected = load_growth("growth_4x4_q11.txt");
  const auto gd = growth_diagram(t, 0, 11);
  ASSERT_EQ(expected.size(), 12u);
  for (int j = 0; j <= 11; ++j)
    for (int i = 0; i <= 11; ++i)
      EXPECT_EQ(gd.cell(i, j), expected[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          << "cell (" << i << "," << j << ")";

  const auto bottom = decode(gd.row(11));
  EXPECT_EQ(bottom, promote_power(t, 11));
  EXPECT_EQ(bottom.rows(), (Rows{{1, 2, 4, 5}, {3, 4, 5, 8}, {4, 5, 7, 9}, {6, 8, 10, 11}}));

  const auto centre = decode(gd.column(11));
  EXPECT_EQ(centre, evacuate(t));
  EXPECT_EQ(centre, dual_evacuate(bottom));
  EXPECT_EQ(centre.rows(), (Rows{{1, 2, 4, 6}, {3, 4, 6, 8}, {4, 5, 7, 9}, {7, 8, 10, 11}}));
}

TEST(Evacuation, InvolutionsAndRelations) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = oracle::random_tableau(rng, Shape::rectangle(3, 4), 9);
    const auto e = evacuate(t);
    EXPECT_EQ(evacuate(e), t);
    EXPECT_EQ(dual_evacuate(dual_evacuate(t)), t);
    EXPECT_EQ(dual_evacuate(e), promote_power(t, 9));
    EXPECT_EQ(promote(e), evacuate(promote_inverse(t)));
    EXPECT_EQ(dual_evacuate(t), rot(evacuate(rot(t))));
  }
}

TEST(Evacuation, NonRectangularStraightShape) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = oracle::random_tableau(rng, Shape(Partition({4, 2, 1})), 8);
    EXPECT_EQ(evacuate(evacuate(t)), t);
    EXPECT_EQ(dual_evacuate(evacuate(t)), promote_power(t, 8));
  }
}

TEST(Evacuation, SkewInputRejected) {
  const IncreasingTableau t(Shape(Partition({2, 2}), Partition({1})), 3, {{2}, {1, 3}});
  EXPECT_THROW(evacuate(t), PreconditionError);
}

TEST(Evacuation, StandardTableauMatchesClassicalEvacuationShape) {
  // on standard tableaux E is Schützenberger evacuation: E(T) has the same shape and is standard
  for (const auto& g : oracle::standard_tableaux({3, 2, 1})) {
    const IncreasingTableau t(Shape(Partition({3, 2, 1})), 6, g);
    const auto e = evacuate(t);
    EXPECT_TRUE(e.is_standard());
    EXPECT_EQ(evacuate(e), t);
  }
}

TEST(GrowthDiagram, ColumnNeedsWindow) {
  const auto t = load("promote_2x3_q6.txt");
  const auto gd = growth_diagram(t, 0, 3);
  EXPECT_THROW(gd.column(7), PreconditionError);
  EXPECT_THROW(gd.row(4), PreconditionError);
  EXPECT_THROW(growth_diagram(t, 1, 3), PreconditionError);
}

TEST(GrowthDiagram, NegativeRowsArePreviousPromotions) {
  const auto t = load("promote_2x3_q6.txt");
  const auto gd = growth_diagram(t, -3, 2);
  EXPECT_EQ(decode(gd.row(-3)), promote_power(t, -3));
  EXPECT_EQ(decode(gd.row(2)), promote_power(t, 2));
}

TEST(GrowthDiagram, ShadingMatchesContainment) {
  const auto t = load("growth_4x4_q11.tab");
  const auto shading = load_shading("growth_4x4_q11_shaded.txt");
  const auto gd = growth_diagram(t, 0, 11);
  for (int j = 0; j <= 11; ++j)
    for (int i = 0; i <= 11; ++i)
      EXPECT_EQ(gd.cell(i, j).contains({2, 4}), shading[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
}

TEST(GrowthDiagram, LatticePathStepsByOne) {
  const auto t = load("growth_4x4_q11.tab");
  const auto gd = growth_diagram(t, 0, 11);
  const auto path = gd.lattice_path({2, 4}, 0);
  ASSERT_FALSE(path.empty());
  for (std::size_t k = 1; k < path.size(); ++k) {
    EXPECT_EQ(path[k].first, path[k - 1].first + 1);
    EXPECT_EQ(std::abs(path[k].second - path[k - 1].second), 1);
  }
}

TEST(Orbit, CanonicalIsLexicographicMinimum) {
  const auto t = load("promote_2x3_q6.txt");
  const auto o = orbit(t);
  EXPECT_EQ(o.elements.front(), t);
  for (const auto& u : o.elements)
    EXPECT_LE(std::vector<int>(o.canonical().entries().begin(), o.canonical().entries().end()),
              std::vector<int>(u.entries().begin(), u.entries().end()));
  EXPECT_EQ(o.size(), orbit_size(t));
  EXPECT_EQ(promote_power(t, static_cast<std::int64_t>(o.size())), t);
}

TEST(Orbit, BudgetExceeded) {
  const auto t = load("orbit_4x10_q26.txt");
  EXPECT_THROW(orbit(t, 100), BudgetExceeded);
  EXPECT_THROW(orbit_size(t, 100), BudgetExceeded);
}

TEST(Promote, AgreesWithGridOracleExhaustively) {
  for (const EnumSpec spec : {EnumSpec{Shape::rectangle(3, 3), 8}, EnumSpec{Shape(Partition({4, 2, 1})), 7}})
    enumerate(spec, [&](const IncreasingTableau& t) {
      ASSERT_EQ(promote(t).rows(), oracle::k_promotion(t.rows(), spec.q));
    });
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = oracle::random_tableau(rng, Shape::rectangle(4, 6), 12);
    ASSERT_EQ(promote(t).rows(), oracle::k_promotion(t.rows(), 12));
  }
}
