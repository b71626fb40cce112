#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include <unistd.h>

#include "inctab/audits.hpp"
#include "inctab/errors.hpp"
#include "oracles.hpp"

using namespace inctab;

namespace {

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("inctab_" + std::to_string(::getpid()) + "_" + name)).string();
}

}  // namespace

TEST(StatSet, Factories) {
  EXPECT_EQ(StatSet::full_frame(3, 4).boxes.size(), 10u);
  EXPECT_EQ(StatSet::corners(3, 4).boxes.size(), 4u);
  EXPECT_EQ(StatSet::corners(1, 1).boxes.size(), 1u);
  EXPECT_EQ(StatSet::first_last_rows(3, 4).boxes.size(), 8u);
  for (const auto& s : symmetric_pairs(3, 3)) {
    EXPECT_TRUE(s.rotation_symmetric());
    EXPECT_TRUE(s.within_frame());
  }
  EXPECT_EQ(symmetric_pairs(3, 3).size(), 4u);
  EXPECT_EQ(symmetric_pairs(3, 4).size(), 5u);
}

TEST(StatSet, Parsing) {
  EXPECT_EQ(parse_stat_sets("corners", 3, 3).size(), 1u);
  EXPECT_EQ(parse_stat_sets("pairs", 4, 4).size(), 6u);
  const auto c = parse_stat_sets("custom:(1,2),(3,2)", 3, 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].rotation_symmetric());
  EXPECT_THROW(parse_stat_sets("bogus", 3, 3), ParseError);
  EXPECT_THROW(parse_stat_sets("custom:(4,1)", 3, 3), PreconditionError);
}

TEST(Wt, SumsEntries) {
  const IncreasingTableau t(Shape::rectangle(2, 3), 6, {{1, 2, 4}, {3, 4, 6}});
  const std::vector<Box> s{{1, 1}, {2, 3}};
  EXPECT_EQ(wt(t, s), 7);
  EXPECT_THROW(wt(t, std::vector<Box>{{3, 1}}), PreconditionError);
}

TEST(Dist, PairSumsToQTimesQPlusOne) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = oracle::random_tableau(rng, Shape::rectangle(3, 4), 9);
    const FrameSet f(3, 4);
    for (const Box& b : f.boxes()) {
      const auto d = dist(t, b);
      const auto d_star = dist(t, rotate_box(3, 4, b));
      EXPECT_EQ(d.size(), 9u);
      int sum = 0;
      for (int v : d) sum += v;
      for (int v : d_star) sum += v;
      EXPECT_EQ(sum, 90);
    }
  }
  const IncreasingTableau t(Shape::rectangle(3, 3), 5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  EXPECT_THROW(dist(t, {2, 2}), PreconditionError);
}

TEST(Audits, SmallRectanglesPass) {
  const EnumSpec spec{Shape::rectangle(3, 3), 7};
  const auto sets = symmetric_pairs(3, 3);
  for (const auto& r : {audit_frame_theorem(spec), audit_homomesy(spec, sets), audit_operator_identities(spec),
                        audit_rot_evac_frame(spec), audit_dist(spec)}) {
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_EQ(r.instances, 175u) << r.audit;
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(Audits, ReportSchema) {
  const auto r = audit_frame_theorem({Shape::rectangle(2, 3), 6}).to_json();
  for (const char* key : {"audit", "shape", "q", "instances", "orbits", "verdict", "elapsed_ms"})
    EXPECT_TRUE(r.contains(key)) << key;
  EXPECT_EQ(r["verdict"], "pass");
  EXPECT_EQ(r["shape"], "2x3");
  EXPECT_FALSE(r.contains("witness"));
}

TEST(Audits, JobsDoNotChangeResults) {
  const EnumSpec spec{Shape::rectangle(3, 3), 8};
  const auto a = audit_frame_theorem(spec, {1});
  const auto b = audit_frame_theorem(spec, {3});
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_EQ(a.orbits, b.orbits);
  EXPECT_EQ(a.details, b.details);
}

TEST(Audits, HomomesyPreconditions) {
  const EnumSpec spec{Shape::rectangle(3, 3), 7};
  const auto centre = StatSet::custom(3, 3, {{2, 2}});
  EXPECT_THROW(audit_homomesy(spec, std::span(&centre, 1)), PreconditionError);
  const auto lopsided = StatSet::custom(3, 3, {{1, 1}});
  EXPECT_THROW(audit_homomesy(spec, std::span(&lopsided, 1), {}, false), PreconditionError);
  const auto wrong = StatSet::corners(2, 2);
  EXPECT_THROW(audit_homomesy(spec, std::span(&wrong, 1)), PreconditionError);
  EXPECT_THROW(audit_frame_theorem({Shape(Partition({3, 2})), 5}), PreconditionError);
}

TEST(Audits, NonFrameWitnessIsFrozen) {
  const json frozen = json::parse(oracle::slurp(oracle::data_path("nonframe_homomesy_witness.json")));
  EXPECT_TRUE(recheck_witness(frozen));
  std::vector<EnumSpec> specs;
  for (int q = 5; q <= 9; ++q) specs.push_back({Shape::rectangle(3, 3), q});
  const auto found = find_nonframe_homomesy_violation(specs);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found->witness, frozen);
}

TEST(Audits, RecheckRejectsHonestInstances) {
  const IncreasingTableau t(Shape::rectangle(2, 3), 6, {{1, 2, 4}, {3, 4, 6}});
  EXPECT_FALSE(recheck_witness({{"kind", "frame"}, {"tableau", to_json(t)}}));
  EXPECT_FALSE(recheck_witness({{"kind", "conjecture_3row"}, {"tableau", to_json(t)}}));
  EXPECT_FALSE(recheck_witness({{"kind", "identity"}, {"identity", "E^2=id"}, {"tableau", to_json(t)}}));
  EXPECT_FALSE(recheck_witness({{"kind", "dist"}, {"tableau", to_json(t)}, {"box", {1, 1}}}));
  EXPECT_FALSE(recheck_witness({{"kind", "homomesy"}, {"tableau", to_json(t)}, {"stat_set", {{1, 1}, {2, 3}}}}));
  EXPECT_FALSE(recheck_witness({{"kind", "nonsense"}}));
  EXPECT_FALSE(recheck_witness(json::object()));
}

TEST(Scan, ThreeByTwoCompletes) {
  const auto r = scan_conjecture_3row(2, 7, {});
  EXPECT_EQ(r.instances, count({Shape::rectangle(3, 2), 7}));
  EXPECT_NE(r.verdict, Verdict::Incomplete);
  EXPECT_EQ(r.details["agreement_floor_holds"], true);
  if (r.witness) EXPECT_TRUE(recheck_witness(*r.witness));
}

TEST(Scan, BudgetAndResume) {
  const std::string path = temp_file("scan.json");
  ScanOptions first;
  first.budget = 100;
  first.checkpoint_path = path;
  first.checkpoint_every = 25;
  const auto partial = scan_conjecture_3row(3, 7, first);
  EXPECT_EQ(partial.verdict, Verdict::Incomplete);
  EXPECT_EQ(partial.instances, 100u);

  ScanOptions second;
  second.checkpoint_path = path;
  second.resume = json::parse(oracle::slurp(path));
  const auto rest = scan_conjecture_3row(3, 7, second);
  EXPECT_EQ(rest.instances, 175u);
  EXPECT_NE(rest.verdict, Verdict::Incomplete);
  const json state = json::parse(oracle::slurp(path));
  EXPECT_EQ(state["complete"], true);
  EXPECT_EQ(state["processed"], 175);

  ScanOptions wrong;
  wrong.resume = state;
  EXPECT_THROW(scan_conjecture_3row(3, 8, wrong), PreconditionError);
  std::filesystem::remove(path);
}
