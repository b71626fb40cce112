#include "inctab/audits.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "inctab/errors.hpp"

namespace inctab {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string fraction(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

void require_rectangle(const EnumSpec& spec, const char* audit) {
  if (!spec.shape.is_rectangle()) throw PreconditionError(std::string(audit) + " needs a rectangular shape");
}

int rect_rows(const EnumSpec& spec) { return spec.shape.rows(); }
int rect_cols(const EnumSpec& spec) { return spec.shape.outer().row(1); }

AuditReport start_report(const char* name, const EnumSpec& spec) {
  AuditReport r;
  r.audit = name;
  r.shape = to_string(spec.shape);
  r.q = spec.q;
  return r;
}

json boxes_json(std::span<const Box> boxes) {
  json out = json::array();
  for (const Box& b : boxes) out.push_back(to_json(b));
  return out;
}

std::vector<IncreasingTableau> powers(const IncreasingTableau& t, int count) {
  std::vector<IncreasingTableau> out;
  out.reserve(static_cast<std::size_t>(count));
  IncreasingTableau current = t;
  for (int k = 0; k < count; ++k) {
    if (k > 0) current = promote(current);
    out.push_back(current);
  }
  return out;
}

// Per-instance outcome; the lowest-index failure becomes the report witness.
struct Finding {
  std::optional<json> witness;
  json tallies = json::object();
};

void add_tallies(json& into, const json& from) {
  for (const auto& [key, value] : from.items()) {
    if (!into.contains(key))
      into[key] = value;
    else
      into[key] = into[key].get<std::int64_t>() + value.get<std::int64_t>();
  }
}

void reduce(AuditReport& report, const std::vector<Finding>& findings) {
  json tallies = json::object();
  for (const auto& f : findings) {
    add_tallies(tallies, f.tallies);
    if (f.witness && !report.witness) {
      report.witness = f.witness;
      report.verdict = Verdict::Fail;
    }
  }
  report.details["tallies"] = tallies;
}

bool frame_differs(const IncreasingTableau& a, const IncreasingTableau& b, Box* where = nullptr) {
  const int m = a.shape().rows();
  const int n = a.shape().outer().row(1);
  const FrameSet f(m, n);
  for (const Box& box : f.boxes()) {
    if (a.at(box) != b.at(box)) {
      if (where) *where = box;
      return true;
    }
  }
  return false;
}

// name, holds
std::vector<std::pair<std::string, bool>> identity_checks(const IncreasingTableau& t) {
  const int q = t.ceiling();
  const auto e = evacuate(t);
  const auto es = dual_evacuate(t);
  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("E^2=id", evacuate(e) == t);
  out.emplace_back("(E*)^2=id", dual_evacuate(es) == t);
  out.emplace_back("E*E=P^q", dual_evacuate(e) == promote_power(t, q));
  out.emplace_back("PE=EP^-1", promote(e) == evacuate(promote_inverse(t)));
  if (t.shape().is_rectangle()) out.emplace_back("E*=rot E rot", es == rot(evacuate(rot(t))));
  return out;
}

std::optional<std::string> lis_mismatch(const IncreasingTableau& t, int a) {
  const Word rw = rot_word(reading_word(t)).at_most(a);
  const Partition evac_shape = encode(evacuate(t))[a];
  const Partition rot_shape = encode(rot(t))[a];
  if (rot_shape.row(1) != lis(rw)) return "first row of rot(T)<=a vs LIS";
  if (rot_shape.length() != lds(rw)) return "first column of rot(T)<=a vs LDS";
  if (evac_shape.row(1) != lis(rw)) return "first row of E(T)<=a vs LIS";
  if (evac_shape.length() != lds(rw)) return "first column of E(T)<=a vs LDS";
  return std::nullopt;
}

bool dist_fails(const IncreasingTableau& t, const Box& b) {
  const int m = t.shape().rows();
  const int n = t.shape().outer().row(1);
  const int q = t.ceiling();
  const auto d = dist(t, b);
  if (d != dist(evacuate(t), b)) return true;
  const auto d_star = dist(t, rotate_box(m, n, b));
  const std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0}) +
                             std::accumulate(d_star.begin(), d_star.end(), std::int64_t{0});
  return total != static_cast<std::int64_t>(q) * (q + 1);
}

void write_checkpoint(const std::string& path, const json& state) {
  if (path.empty()) return;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint '" + tmp + "'");
    out << state.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

json AuditReport::to_json() const {
  json j;
  j["audit"] = audit;
  j["shape"] = shape;
  j["q"] = q;
  j["instances"] = instances;
  j["orbits"] = orbits;
  j["verdict"] = verdict == Verdict::Pass ? "pass" : verdict == Verdict::Fail ? "fail" : "incomplete";
  if (witness) j["witness"] = *witness;
  j["elapsed_ms"] = elapsed_ms;
  j["details"] = details;
  return j;
}

StatSet StatSet::full_frame(int m, int n) {
  const auto f = frame(m, n);
  return {"full-frame", m, n, std::vector<Box>(f.boxes().begin(), f.boxes().end())};
}

StatSet StatSet::corners(int m, int n) {
  std::set<Box> s{{1, 1}, {1, n}, {m, 1}, {m, n}};
  return {"corners", m, n, std::vector<Box>(s.begin(), s.end())};
}

StatSet StatSet::first_last_rows(int m, int n) {
  std::set<Box> s;
  for (int c = 1; c <= n; ++c) {
    s.insert({1, c});
    s.insert({m, c});
  }
  return {"rows", m, n, std::vector<Box>(s.begin(), s.end())};
}

StatSet StatSet::custom(int m, int n, std::vector<Box> boxes, std::string name) {
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  for (const Box& b : boxes)
    if (b.row < 1 || b.row > m || b.col < 1 || b.col > n)
      throw PreconditionError("stat-set box " + to_string(b) + " is outside the rectangle");
  return {std::move(name), m, n, std::move(boxes)};
}

bool StatSet::within_frame() const {
  const FrameSet f(rows, cols);
  return std::all_of(boxes.begin(), boxes.end(), [&](const Box& b) { return f.contains(b); });
}

bool StatSet::rotation_symmetric() const {
  const std::set<Box> s(boxes.begin(), boxes.end());
  return std::all_of(boxes.begin(), boxes.end(), [&](const Box& b) { return s.count(rotate_box(rows, cols, b)) > 0; });
}

std::vector<StatSet> symmetric_pairs(int m, int n) {
  std::vector<StatSet> out;
  const FrameSet f(m, n);
  for (const Box& b : f.boxes()) {
    const Box star = rotate_box(m, n, b);
    if (star < b) continue;
    std::vector<Box> boxes{b};
    if (!(star == b)) boxes.push_back(star);
    out.push_back({"pair" + to_string(b) + to_string(star), m, n, std::move(boxes)});
  }
  return out;
}

std::vector<StatSet> parse_stat_sets(std::string_view text, int m, int n) {
  if (text == "full-frame") return {StatSet::full_frame(m, n)};
  if (text == "corners") return {StatSet::corners(m, n)};
  if (text == "rows") return {StatSet::first_last_rows(m, n)};
  if (text == "pairs") return symmetric_pairs(m, n);
  if (text.starts_with("custom:")) return {StatSet::custom(m, n, parse_box_list(text.substr(7)), "custom")};
  throw ParseError("unknown stat set '" + std::string(text) + "' (full-frame, corners, rows, pairs, custom:...)");
}

std::int64_t wt(const IncreasingTableau& t, std::span<const Box> boxes) {
  std::int64_t sum = 0;
  for (const Box& b : boxes) sum += t.at(b);
  return sum;
}

std::vector<int> dist(const IncreasingTableau& t, const Box& b) {
  if (!t.shape().is_rectangle()) throw PreconditionError("Dist needs a rectangular tableau");
  if (!frame(t.shape().rows(), t.shape().outer().row(1)).contains(b))
    throw PreconditionError("Dist box " + to_string(b) + " is not in the frame");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(t.ceiling()));
  IncreasingTableau current = t;
  for (int k = 0; k < t.ceiling(); ++k) {
    if (k > 0) current = promote(current);
    out.push_back(current.at(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AuditReport audit_frame_theorem(const EnumSpec& spec, const AuditOptions& options) {
  require_rectangle(spec, "frame audit");
  const auto start = Clock::now();
  AuditReport report = start_report("frame", spec);
  const auto orbits = orbit_partition(spec, options.jobs, options.orbit_budget);
  const auto q = static_cast<std::size_t>(spec.q);

  std::vector<Finding> findings(orbits.size());
  parallel_for(orbits.size(), options.jobs, [&](std::size_t o) {
    const auto& elems = orbits[o].elements;
    std::int64_t fixed = 0;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      const auto& t = elems[k];
      const auto& image = elems[(k + q) % elems.size()];
      if (t == image) ++fixed;
      Box where;
      if (!findings[o].witness && frame_differs(t, image, &where)) {
        findings[o].witness = json{{"kind", "frame"},
                                   {"tableau", to_json(t)},
                                   {"box", to_json(where)},
                                   {"expected", t.at(where)},
                                   {"observed", image.at(where)}};
      }
    }
    findings[o].tallies = {{"fixed_by_P^q", fixed}};
  });

  reduce(report, findings);
  for (const auto& o : orbits) report.instances += o.size();
  report.orbits = orbits.size();
  report.details["frame_boxes"] = frame(rect_rows(spec), rect_cols(spec)).size();
  report.elapsed_ms = ms_since(start);
  return report;
}

AuditReport audit_homomesy(const EnumSpec& spec, std::span<const StatSet> sets, const AuditOptions& options,
                           bool require_frame) {
  require_rectangle(spec, "homomesy audit");
  const int m = rect_rows(spec);
  const int n = rect_cols(spec);
  for (const auto& s : sets) {
    if (s.rows != m || s.cols != n) throw PreconditionError("stat set '" + s.name + "' is for a different rectangle");
    if (!s.rotation_symmetric())
      throw PreconditionError("stat set '" + s.name + "' is not fixed under 180-degree rotation");
    if (require_frame && !s.within_frame())
      throw PreconditionError("stat set '" + s.name + "' leaves the frame");
  }
  const auto start = Clock::now();
  AuditReport report = start_report("homomesy", spec);
  const auto orbits = orbit_partition(spec, options.jobs, options.orbit_budget);
  const std::int64_t q = spec.q;

  std::vector<Finding> findings(orbits.size());
  parallel_for(orbits.size(), options.jobs, [&](std::size_t o) {
    const auto& elems = orbits[o].elements;
    const auto size = static_cast<std::int64_t>(elems.size());
    for (std::size_t s = 0; s < sets.size(); ++s) {
      std::int64_t sum = 0;
      for (const auto& t : elems) sum += wt(t, sets[s].boxes);
      const auto card = static_cast<std::int64_t>(sets[s].boxes.size());
      // average = sum/size must equal (q+1)|S|/2
      const bool ok = 2 * sum == (q + 1) * card * size;
      if (!ok) {
        findings[o].tallies["violations:" + sets[s].name] = 1;
        if (!findings[o].witness)
          findings[o].witness = json{{"kind", "homomesy"},
                                     {"tableau", to_json(orbits[o].canonical())},
                                     {"stat_set", boxes_json(sets[s].boxes)},
                                     {"stat_set_name", sets[s].name},
                                     {"orbit_size", size},
                                     {"orbit_sum", sum},
                                     {"expected_average", fraction((q + 1) * card, 2)},
                                     {"observed_average", fraction(sum, size)}};
      }
    }
  });

  reduce(report, findings);
  for (const auto& o : orbits) report.instances += o.size();
  report.orbits = orbits.size();
  json per_set = json::array();
  for (const auto& s : sets) {
    const auto card = static_cast<std::int64_t>(s.boxes.size());
    per_set.push_back({{"name", s.name},
                       {"boxes", boxes_json(s.boxes)},
                       {"expected_average", fraction((q + 1) * card, 2)},
                       {"violations", report.details["tallies"].value("violations:" + s.name, std::int64_t{0})}});
  }
  report.details["stat_sets"] = per_set;
  report.elapsed_ms = ms_since(start);
  return report;
}

AuditReport audit_operator_identities(std::span<const IncreasingTableau> instances, const std::string& label,
                                      const AuditOptions& options) {
  const auto start = Clock::now();
  AuditReport report;
  report.audit = "identities";
  report.shape = label;
  report.q = instances.empty() ? 0 : instances.front().ceiling();
  std::vector<Finding> findings(instances.size());
  parallel_for(instances.size(), options.jobs, [&](std::size_t i) {
    for (const auto& [name, holds] : identity_checks(instances[i])) {
      findings[i].tallies["checked:" + name] = 1;
      if (holds) continue;
      findings[i].tallies["violations:" + name] = 1;
      if (!findings[i].witness)
        findings[i].witness = json{{"kind", "identity"}, {"identity", name}, {"tableau", to_json(instances[i])}};
    }
  });
  reduce(report, findings);
  report.instances = instances.size();
  report.elapsed_ms = ms_since(start);
  return report;
}

AuditReport audit_operator_identities(const EnumSpec& spec, const AuditOptions& options) {
  const auto all = enumerate_all(spec);
  auto report = audit_operator_identities(all, to_string(spec.shape), options);
  report.q = spec.q;
  return report;
}

AuditReport audit_rot_evac_frame(const EnumSpec& spec, const AuditOptions& options) {
  require_rectangle(spec, "rot-evac audit");
  const auto start = Clock::now();
  AuditReport report = start_report("rot-evac", spec);
  const auto all = enumerate_all(spec);
  const int m = rect_rows(spec);
  const int n = rect_cols(spec);

  std::vector<Finding> findings(all.size());
  parallel_for(all.size(), options.jobs, [&](std::size_t i) {
    const auto& t = all[i];
    const auto r = rot(t);
    const auto e = evacuate(t);
    bool first_row = true, first_col = true, last_row = true, last_col = true;
    for (int c = 1; c <= n; ++c) {
      first_row = first_row && r.at({1, c}) == e.at({1, c});
      last_row = last_row && r.at({m, c}) == e.at({m, c});
    }
    for (int rr = 1; rr <= m; ++rr) {
      first_col = first_col && r.at({rr, 1}) == e.at({rr, 1});
      last_col = last_col && r.at({rr, n}) == e.at({rr, n});
    }
    auto& f = findings[i];
    f.tallies = {{"first_row_agree", first_row ? 1 : 0},
                 {"first_col_agree", first_col ? 1 : 0},
                 {"frame_agree", first_row && first_col && last_row && last_col ? 1 : 0},
                 {"lis_lds_checks", spec.q + 1}};
    Box where;
    if (frame_differs(r, e, &where)) {
      f.witness = json{{"kind", "rot_evac_frame"},
                       {"tableau", to_json(t)},
                       {"box", to_json(where)},
                       {"rot", r.at(where)},
                       {"evacuation", e.at(where)}};
      return;
    }
    for (int a = 0; a <= spec.q; ++a) {
      if (auto why = lis_mismatch(t, a)) {
        f.witness = json{{"kind", "rot_evac_lis"}, {"tableau", to_json(t)}, {"a", a}, {"check", *why}};
        return;
      }
    }
  });
  reduce(report, findings);
  report.instances = all.size();
  report.elapsed_ms = ms_since(start);
  return report;
}

AuditReport audit_dist(const EnumSpec& spec, const AuditOptions& options) {
  require_rectangle(spec, "dist audit");
  const auto start = Clock::now();
  AuditReport report = start_report("dist", spec);
  const auto all = enumerate_all(spec);
  const int m = rect_rows(spec);
  const int n = rect_cols(spec);
  const auto frame_boxes = frame(m, n);
  const int q = spec.q;

  std::vector<Finding> findings(all.size());
  parallel_for(all.size(), options.jobs, [&](std::size_t i) {
    const auto& t = all[i];
    const auto forward = powers(t, q);
    const auto evac = powers(evacuate(t), q);
    auto column = [](const std::vector<IncreasingTableau>& ps, const Box& b) {
      std::vector<int> out;
      for (const auto& p : ps) out.push_back(p.at(b));
      std::sort(out.begin(), out.end());
      return out;
    };
    for (const Box& b : frame_boxes.boxes()) {
      const auto d = column(forward, b);
      const auto d_evac = column(evac, b);
      const auto d_star = column(forward, rotate_box(m, n, b));
      const std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0}) +
                                 std::accumulate(d_star.begin(), d_star.end(), std::int64_t{0});
      const bool ok = d == d_evac && total == static_cast<std::int64_t>(q) * (q + 1);
      findings[i].tallies["box_checks"] = findings[i].tallies.value("box_checks", std::int64_t{0}) + 1;
      if (!ok && !findings[i].witness)
        findings[i].witness = json{{"kind", "dist"}, {"tableau", to_json(t)}, {"box", to_json(b)}};
    }
  });
  reduce(report, findings);
  report.instances = all.size();
  report.elapsed_ms = ms_since(start);
  return report;
}

AuditReport scan_conjecture_3row(int n, int q, const ScanOptions& options) {
  if (n < 1) throw PreconditionError("scan-3row needs n >= 1");
  const auto start = Clock::now();
  const EnumSpec spec{Shape::rectangle(3, n), q};
  AuditReport report = start_report("scan-3row", spec);
  const int floor = std::min(3 * n, 2 * n + 2);

  TableauEnumerator e(spec);
  std::uint64_t processed = 0;
  int min_agreement = 3 * n;
  std::optional<std::vector<int>> last;
  if (options.resume) {
    const json& r = *options.resume;
    if (r.value("n", -1) != n || r.value("q", -1) != q)
      throw PreconditionError("checkpoint is for a different n or q");
    processed = r.value("processed", std::uint64_t{0});
    min_agreement = r.value("min_agreement", 3 * n);
    if (r.contains("last") && !r["last"].is_null()) {
      last = r["last"].get<std::vector<int>>();
      e.resume_after(*last);
    }
  }

  auto state = [&](bool complete) {
    return json{{"scan", "scan-3row"}, {"n", n},         {"q", q}, {"processed", processed},
                {"last", last ? json(*last) : json(nullptr)}, {"min_agreement", min_agreement},
                {"complete", complete}};
  };

  std::uint64_t this_run = 0;
  bool complete = false;
  while (true) {
    if (options.budget > 0 && this_run >= options.budget) break;
    if (!e.next()) {
      complete = true;
      break;
    }
    const auto t = e.current();
    const auto image = promote_power(t, q);
    int agree = 0;
    for (const Box& b : t.shape().boxes()) agree += t.at(b) == image.at(b) ? 1 : 0;
    min_agreement = std::min(min_agreement, agree);
    last.emplace(t.entries().begin(), t.entries().end());
    ++processed;
    ++this_run;
    if (!(image == t)) {
      report.witness = json{{"kind", "conjecture_3row"}, {"tableau", to_json(t)}, {"image", to_json(image)}};
      report.verdict = Verdict::Fail;
      break;
    }
    if (options.checkpoint_every > 0 && processed % options.checkpoint_every == 0)
      write_checkpoint(options.checkpoint_path, state(false));
  }
  write_checkpoint(options.checkpoint_path, state(complete));

  if (report.verdict != Verdict::Fail && !complete) report.verdict = Verdict::Incomplete;
  report.instances = processed;
  report.details["finding"] = report.verdict == Verdict::Fail ? "counterexample found"
                              : complete                      ? "no counterexample found (the statement remains open)"
                                                              : "budget exhausted; resume from the checkpoint";
  report.details["min_agreement"] = processed > 0 ? json(min_agreement) : json(nullptr);
  report.details["agreement_floor"] = floor;
  report.details["agreement_floor_holds"] = processed == 0 || min_agreement >= floor;
  report.details["watermark"] = last ? json(*last) : json(nullptr);
  if (!options.checkpoint_path.empty()) report.details["checkpoint"] = options.checkpoint_path;
  report.elapsed_ms = ms_since(start);
  return report;
}

std::optional<AuditReport> find_nonframe_homomesy_violation(std::span<const EnumSpec> specs,
                                                            const AuditOptions& options) {
  for (const auto& spec : specs) {
    require_rectangle(spec, "non-frame homomesy search");
    const int m = rect_rows(spec);
    const int n = rect_cols(spec);
    const FrameSet f(m, n);
    for (const Box& b : Shape::rectangle(m, n).boxes()) {
      const Box star = rotate_box(m, n, b);
      if (f.contains(b) || star < b) continue;
      std::vector<Box> boxes{b};
      if (!(star == b)) boxes.push_back(star);
      const StatSet s = StatSet::custom(m, n, boxes, "nonframe" + to_string(b) + to_string(star));
      auto report = audit_homomesy(spec, std::span(&s, 1), options, false);
      if (!report.passed()) return report;
    }
  }
  return std::nullopt;
}

bool recheck_witness(const json& w) {
  try {
    const std::string kind = w.at("kind").get<std::string>();
    const auto t = tableau_from_json(w.at("tableau"));
    const int q = t.ceiling();
    if (kind == "frame") return frame_differs(t, promote_power(t, q));
    if (kind == "conjecture_3row") return !(promote_power(t, q) == t);
    if (kind == "rot_evac_frame") return frame_differs(rot(t), evacuate(t));
    if (kind == "rot_evac_lis") return lis_mismatch(t, w.at("a").get<int>()).has_value();
    if (kind == "dist") return dist_fails(t, box_from_json(w.at("box")));
    if (kind == "identity") {
      const auto name = w.at("identity").get<std::string>();
      for (const auto& [check, holds] : identity_checks(t))
        if (check == name) return !holds;
      return false;
    }
    if (kind == "homomesy") {
      std::vector<Box> boxes;
      for (const auto& b : w.at("stat_set")) boxes.push_back(box_from_json(b));
      const auto o = orbit(t);
      std::int64_t sum = 0;
      for (const auto& u : o.elements) sum += wt(u, boxes);
      const auto card = static_cast<std::int64_t>(boxes.size());
      return 2 * sum != (static_cast<std::int64_t>(q) + 1) * card * static_cast<std::int64_t>(o.size());
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace inctab
