#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "inctab/audits.hpp"
#include "inctab/dynamics.hpp"
#include "inctab/enumeration.hpp"
#include "inctab/errors.hpp"
#include "inctab/io.hpp"
#include "inctab/kjdt.hpp"
#include "inctab/render.hpp"

#ifndef INCTAB_VERSION
#define INCTAB_VERSION "unknown"
#endif

namespace {

using namespace inctab;

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  bool json = false;
  int jobs = 1;
};

int default_jobs() {
  const char* env = std::getenv("INCTAB_JOBS");
  if (!env || !*env) return 1;
  try {
    const int n = std::stoi(env);
    if (n >= 1) return n;
  } catch (const std::exception&) {
  }
  throw PreconditionError(std::string("INCTAB_JOBS must be a positive integer, got '") + env + "'");
}

void print(const Globals& g, const IncreasingTableau& t) {
  if (g.json)
    std::cout << to_json(t).dump() << "\n";
  else
    std::cout << format_text(t);
}

StageObserver tracer(const Globals& g, json& stages, std::string prefix = {}) {
  return [&g, &stages, prefix](std::string_view label, const BulletFilling& x) {
    if (g.json)
      stages.push_back({{"stage", prefix + std::string(label)}, {"filling", to_json(x)}});
    else
      std::cout << "# " << prefix << label << "\n" << format_text(x);
  };
}

void finish_traced(const Globals& g, const json& stages, const IncreasingTableau& result) {
  if (g.json)
    std::cout << json{{"trace", stages}, {"result", to_json(result)}}.dump() << "\n";
  else
    std::cout << format_text(result);
}

CornerStrategy parse_strategy(const std::string& text) {
  if (text == "all") return CornerStrategy::all_corners();
  if (text.rfind("random:", 0) == 0) {
    const std::string seed = text.substr(7);
    try {
      std::size_t used = 0;
      const auto value = std::stoull(seed, &used);
      if (used == seed.size()) return CornerStrategy::seeded_random(value);
    } catch (const std::exception&) {
    }
  }
  throw PreconditionError("strategy must be 'all' or 'random:<seed>', got '" + text + "'");
}

Box parse_one_box(std::string text) {
  const auto eq = text.find('=');
  if (eq != std::string::npos) text = text.substr(eq + 1);
  const auto boxes = parse_box_list(text);
  if (boxes.size() != 1) throw ParseError("expected a single box (r,c), got '" + text + "'");
  return boxes.front();
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon != std::string::npos) return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
  }
  throw ParseError("--rows expects a:b, got '" + text + "'");
}

EnumSpec rectangle_spec(const std::string& shape, int q) {
  EnumSpec spec{parse_shape(shape), q};
  if (!spec.shape.is_rectangle()) throw PreconditionError("audits need a rectangular shape MxN, got '" + shape + "'");
  return spec;
}

int report_exit(const AuditReport& r) {
  switch (r.verdict) {
    case Verdict::Pass:
      return kOk;
    case Verdict::Fail:
      return kCounterexample;
    case Verdict::Incomplete:
      return kBudget;
  }
  return kUsage;
}

void emit_report(const AuditReport& r, const std::string& out) {
  const std::string text = r.to_json().dump(2);
  std::cout << text << "\n";
  if (!out.empty()) {
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw PreconditionError("cannot write '" + out + "'");
    f << text << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inctab: increasing tableaux, K-promotion, K-evacuation and exhaustive audits"};
  app.set_version_flag("--version", std::string("inctab ") + INCTAB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print results as JSON instead of the text format");

  int rc = kOk;
  std::string file = "-";
  auto add_file = [&file](CLI::App* sub) { sub->add_option("file", file, "Input file, or - for stdin"); };

  // promote
  auto* promote_cmd = app.add_subcommand("promote", "Apply K-promotion");
  std::int64_t steps = 1;
  bool trace = false;
  add_file(promote_cmd);
  promote_cmd->add_option("--steps", steps, "Apply P^k; negative k uses the inverse");
  promote_cmd->add_flag("--trace", trace, "Print every intermediate stage");
  promote_cmd->callback([&] {
    const auto t = parse_tableau(read_input(file));
    if (!trace) {
      print(g, promote_power(t, steps));
      return;
    }
    if (steps < 0) throw PreconditionError("--trace needs a nonnegative --steps");
    json stages = json::array();
    IncreasingTableau current = t;
    for (std::int64_t k = 0; k < steps; ++k) {
      const std::string prefix = steps > 1 ? "step " + std::to_string(k + 1) + ": " : "";
      current = promote(current, tracer(g, stages, prefix));
    }
    finish_traced(g, stages, current);
  });

  // rectify
  auto* rectify_cmd = app.add_subcommand("rectify", "Rectify a skew tableau by K-jeu de taquin");
  std::string strategy;
  add_file(rectify_cmd);
  rectify_cmd->add_option("--strategy", strategy, "all | random:<seed>")->required();
  rectify_cmd->add_flag("--trace", trace, "Print every swap stage");
  rectify_cmd->callback([&] {
    const auto t = parse_tableau(read_input(file));
    auto chosen = parse_strategy(strategy);
    json stages = json::array();
    if (!trace) {
      print(g, rectify(t, chosen));
      return;
    }
    int slide_no = 0;
    std::string prefix;
    StageObserver counted = [&](std::string_view label, const BulletFilling& x) {
      if (label == "In") prefix = "slide " + std::to_string(++slide_no) + ": ";
      tracer(g, stages, prefix)(label, x);
    };
    finish_traced(g, stages, rectify(t, chosen, counted));
  });

  // slide
  auto* slide_cmd = app.add_subcommand("slide", "One K-jeu de taquin slide into the given inner corners");
  std::string corners;
  add_file(slide_cmd);
  slide_cmd->add_option("--corners", corners, "Inner corners, e.g. \"(1,2),(2,1)\"")->required();
  slide_cmd->add_flag("--trace", trace, "Print every swap stage");
  slide_cmd->callback([&] {
    const auto t = parse_tableau(read_input(file));
    const auto boxes = parse_box_list(corners);
    json stages = json::array();
    if (!trace) {
      print(g, slide(t, boxes));
      return;
    }
    finish_traced(g, stages, slide(t, boxes, tracer(g, stages)));
  });

  // evacuate / dual-evacuate
  auto* evac_cmd = app.add_subcommand("evacuate", "Apply K-evacuation");
  add_file(evac_cmd);
  evac_cmd->callback([&] { print(g, evacuate(parse_tableau(read_input(file)))); });
  auto* dual_cmd = app.add_subcommand("dual-evacuate", "Apply dual K-evacuation");
  add_file(dual_cmd);
  dual_cmd->callback([&] { print(g, dual_evacuate(parse_tableau(read_input(file)))); });

  // growth
  auto* growth_cmd = app.add_subcommand("growth", "Render the K-theoretic growth diagram");
  std::string rows_range, format = "text", shade, lattice;
  add_file(growth_cmd);
  growth_cmd->add_option("--rows", rows_range, "Rows a:b of the diagram (default 0:q)");
  growth_cmd->add_option("--format", format, "text | svg")->check(CLI::IsMember({"text", "svg"}));
  growth_cmd->add_option("--shade", shade, "Shade cells containing box (r,c) (svg)");
  growth_cmd->add_option("--lattice-path", lattice, "Print (k, rank) points for b=(r,c)");
  growth_cmd->callback([&] {
    const auto t = parse_tableau(read_input(file));
    auto [a, b] = rows_range.empty() ? std::pair<std::int64_t, std::int64_t>{0, t.ceiling()} : parse_range(rows_range);
    if (a > b) throw PreconditionError("--rows needs a <= b");
    const auto gd = growth_diagram(t, a, b);
    if (!lattice.empty()) {
      const auto path = gd.lattice_path(parse_one_box(lattice), 2 * gd.j_min());
      if (g.json) {
        json pts = json::array();
        for (auto [k, rank] : path) pts.push_back({k, rank});
        std::cout << pts.dump() << "\n";
      } else {
        for (auto [k, rank] : path) std::cout << k << " " << rank << "\n";
      }
      return;
    }
    if (format == "svg") {
      std::cout << render_growth_svg(gd, shade.empty() ? std::nullopt : std::optional<Box>(parse_one_box(shade)));
    } else if (g.json) {
      json rows = json::array();
      for (auto j = gd.j_min(); j <= gd.j_max(); ++j) {
        json row = json::array();
        for (const auto& p : gd.row(j).shapes()) row.push_back(std::vector<int>(p.parts().begin(), p.parts().end()));
        rows.push_back({{"j", j}, {"shapes", row}});
      }
      std::cout << rows.dump() << "\n";
    } else {
      std::cout << render_growth_text(gd);
    }
  });

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Compute the promotion orbit of a tableau");
  std::uint64_t budget = kDefaultOrbitBudget;
  bool all = false;
  add_file(orbit_cmd);
  orbit_cmd->add_option("--budget", budget, "Give up after this many promotions (exit 3)");
  orbit_cmd->add_flag("--all", all, "Print every orbit element");
  orbit_cmd->callback([&] {
    const auto t = parse_tableau(read_input(file));
    if (!all) {
      const auto size = orbit_size(t, budget);
      if (g.json)
        std::cout << json{{"size", size}}.dump() << "\n";
      else
        std::cout << size << "\n";
      return;
    }
    const auto o = orbit(t, budget);
    if (g.json) {
      json elems = json::array();
      for (const auto& u : o.elements) elems.push_back(to_json(u));
      std::cout << json{{"size", o.size()}, {"canonical_index", o.canonical_index}, {"elements", elems}}.dump()
                << "\n";
    } else {
      std::cout << "# orbit size " << o.size() << "\n";
      for (const auto& u : o.elements) std::cout << format_text(u);
    }
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "List Inc^q(shape)");
  std::string shape_text;
  int q = 0;
  bool count_only = false;
  std::optional<int> jobs;
  enum_cmd->add_option("--shape", shape_text, "Straight shape, e.g. 3x3 or 4,2,1")->required();
  enum_cmd->add_option("--q", q, "Ceiling")->required();
  enum_cmd->add_flag("--count-only", count_only, "Print only the number of tableaux");
  enum_cmd->add_option("--jobs", jobs, "Worker threads (default $INCTAB_JOBS or 1)");
  enum_cmd->callback([&] {
    const EnumSpec spec{parse_shape(shape_text), q};
    if (count_only) {
      const auto n = count(spec, jobs.value_or(g.jobs));
      if (g.json)
        std::cout << json{{"shape", to_string(spec.shape)}, {"q", q}, {"count", n}}.dump() << "\n";
      else
        std::cout << n << "\n";
      return;
    }
    bool first = true;
    enumerate(spec, [&](const IncreasingTableau& t) {
      if (g.json) {
        std::cout << to_json(t).dump() << "\n";
      } else {
        if (!first) std::cout << "\n";
        std::cout << format_text(t);
      }
      first = false;
    });
  });

  // orbits
  auto* orbits_cmd = app.add_subcommand("orbits", "Partition Inc^q(shape) into promotion orbits");
  bool summary = false;
  orbits_cmd->add_option("--shape", shape_text, "Straight shape")->required();
  orbits_cmd->add_option("--q", q, "Ceiling")->required();
  orbits_cmd->add_flag("--summary", summary, "Print the orbit-size histogram as JSON");
  orbits_cmd->add_option("--jobs", jobs, "Worker threads");
  orbits_cmd->add_option("--budget", budget, "Per-orbit promotion budget");
  orbits_cmd->callback([&] {
    const EnumSpec spec{parse_shape(shape_text), q};
    const auto orbits = orbit_partition(spec, jobs.value_or(g.jobs), budget);
    std::map<std::size_t, std::uint64_t> histogram;
    std::uint64_t total = 0;
    for (const auto& o : orbits) {
      ++histogram[o.size()];
      total += o.size();
    }
    if (summary) {
      json h = json::object();
      for (auto [size, n] : histogram) h[std::to_string(size)] = n;
      std::cout << json{{"shape", to_string(spec.shape)}, {"q", q}, {"tableaux", total}, {"orbits", orbits.size()},
                        {"histogram", h}}
                       .dump(2)
                << "\n";
      return;
    }
    for (const auto& o : orbits) {
      if (g.json) {
        std::cout << json{{"size", o.size()}, {"canonical", to_json(o.canonical())}}.dump() << "\n";
      } else {
        std::cout << "# orbit size " << o.size() << "\n" << format_text(o.canonical());
      }
    }
  });

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "Exhaustive audit over Inc^q(MxN); prints a JSON report");
  std::string kind, out;
  std::vector<std::string> stat_sets;
  audit_cmd->add_option("kind", kind, "frame | homomesy | identities | rot-evac | dist")
      ->required()
      ->check(CLI::IsMember({"frame", "homomesy", "identities", "rot-evac", "dist"}));
  audit_cmd->add_option("--shape", shape_text, "Rectangle MxN")->required();
  audit_cmd->add_option("--q", q, "Ceiling")->required();
  audit_cmd->add_option("--stat-set", stat_sets,
                        "corners | full-frame | rows | pairs | custom:\"(r,c),...\" (repeatable; homomesy only)");
  audit_cmd->add_option("--jobs", jobs, "Worker threads");
  audit_cmd->add_option("--budget", budget, "Per-orbit promotion budget");
  audit_cmd->add_option("--out", out, "Also write the report to this file");
  audit_cmd->callback([&] {
    const EnumSpec spec = rectangle_spec(shape_text, q);
    const AuditOptions opts{jobs.value_or(g.jobs), budget};
    if (!stat_sets.empty() && kind != "homomesy") throw PreconditionError("--stat-set applies to the homomesy audit");
    AuditReport r;
    if (kind == "frame") {
      r = audit_frame_theorem(spec, opts);
    } else if (kind == "homomesy") {
      const int m = spec.shape.rows();
      const int n = spec.shape.outer().row(1);
      std::vector<StatSet> sets;
      if (stat_sets.empty()) stat_sets = {"full-frame"};
      for (const auto& s : stat_sets)
        for (auto& parsed : parse_stat_sets(s, m, n)) sets.push_back(std::move(parsed));
      r = audit_homomesy(spec, sets, opts);
    } else if (kind == "identities") {
      r = audit_operator_identities(spec, opts);
    } else if (kind == "rot-evac") {
      r = audit_rot_evac_frame(spec, opts);
    } else {
      r = audit_dist(spec, opts);
    }
    emit_report(r, out);
    rc = report_exit(r);
  });

  // scan-3row
  auto* scan_cmd = app.add_subcommand("scan-3row", "Search Inc^q(3xN) for T with P^q(T) != T");
  int n_cols = 0;
  std::string resume, checkpoint;
  std::uint64_t scan_budget = 0, every = 10'000;
  scan_cmd->add_option("--n", n_cols, "Number of columns")->required();
  scan_cmd->add_option("--q", q, "Ceiling")->required();
  scan_cmd->add_option("--resume", resume, "Continue from a checkpoint file");
  scan_cmd->add_option("--checkpoint", checkpoint, "Write checkpoints here (default: the --resume file)");
  scan_cmd->add_option("--budget", scan_budget, "Stop after this many tableaux in this run (exit 3)");
  scan_cmd->add_option("--every", every, "Checkpoint interval");
  scan_cmd->add_option("--out", out, "Also write the report to this file");
  scan_cmd->callback([&] {
    ScanOptions opts;
    opts.budget = scan_budget;
    opts.checkpoint_every = every;
    opts.checkpoint_path = checkpoint.empty() ? resume : checkpoint;
    if (!resume.empty()) {
      try {
        opts.resume = json::parse(read_input(resume));
      } catch (const json::exception& e) {
        throw ParseError("checkpoint '" + resume + "' is not valid JSON: " + e.what());
      }
    }
    const auto r = scan_conjecture_3row(n_cols, q, opts);
    emit_report(r, out);
    rc = report_exit(r);
  });

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check that a file holds a valid increasing tableau");
  add_file(validate_cmd);
  validate_cmd->callback([&] {
    const auto t = parse_tableau(read_input(file));
    if (g.json)
      std::cout << json{{"valid", true}, {"q", t.ceiling()}, {"shape", to_string(t.shape())}}.dump() << "\n";
    else
      std::cout << "ok: q=" << t.ceiling() << " shape=" << to_string(t.shape()) << "\n";
  });

  try {
    g.jobs = default_jobs();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "inctab: budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InternalError& e) {
    std::cerr << "inctab: internal error: " << e.what() << "\n";
    return kUsage;
  } catch (const inctab::Error& e) {
    std::cerr << "inctab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "inctab: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}
