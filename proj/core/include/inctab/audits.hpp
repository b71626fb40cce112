#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inctab/enumeration.hpp"
#include "inctab/io.hpp"

namespace inctab {

/// A set of boxes of an m×n rectangle used as a weight statistic.
struct StatSet {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::vector<Box> boxes;

  static StatSet full_frame(int m, int n);
  static StatSet corners(int m, int n);
  static StatSet first_last_rows(int m, int n);
  static StatSet custom(int m, int n, std::vector<Box> boxes, std::string name = "custom");

  bool within_frame() const;
  bool rotation_symmetric() const;
};

/// {b, b*} for every frame box b, each pair once (self-paired boxes give singletons).
std::vector<StatSet> symmetric_pairs(int m, int n);

/// "full-frame", "corners", "rows" or "custom:(r,c),...". ("pairs" expands to symmetric_pairs.)
std::vector<StatSet> parse_stat_sets(std::string_view text, int m, int n);

/// Sum of entries over S. Throws PreconditionError for a box outside the shape.
std::int64_t wt(const IncreasingTableau& t, std::span<const Box> boxes);

/// Sorted multiset of the b-entries of P^k(T), 0 <= k < q. b must lie in the frame.
std::vector<int> dist(const IncreasingTableau& t, const Box& b);

enum class Verdict { Pass, Fail, Incomplete };

struct AuditReport {
  std::string audit;
  std::string shape;
  int q = 0;
  std::uint64_t instances = 0;
  std::uint64_t orbits = 0;
  Verdict verdict = Verdict::Pass;
  std::optional<json> witness;
  std::int64_t elapsed_ms = 0;
  json details = json::object();

  bool passed() const { return verdict == Verdict::Pass; }
  json to_json() const;
};

struct AuditOptions {
  int jobs = 1;
  std::uint64_t orbit_budget = kDefaultOrbitBudget;
};

/// Frame(P^q(T)) = Frame(T) for every T in Inc^q(m×n).
AuditReport audit_frame_theorem(const EnumSpec& spec, const AuditOptions& options = {});

/// Every promotion orbit averages (q+1)|S|/2 for each S, in exact arithmetic.
/// With require_frame set, each S must be a rotation-symmetric subset of the frame.
AuditReport audit_homomesy(const EnumSpec& spec, std::span<const StatSet> sets, const AuditOptions& options = {},
                           bool require_frame = true);

/// E^2 = id, (E*)^2 = id, E* E = P^q, P E = E P^-1, and on rectangles E* = rot E rot.
AuditReport audit_operator_identities(const EnumSpec& spec, const AuditOptions& options = {});
AuditReport audit_operator_identities(std::span<const IncreasingTableau> instances, const std::string& label,
                                      const AuditOptions& options = {});

/// rot(T) and E(T) agree on the frame; first row and first column are also
/// tallied separately, and row/column lengths of E(T)<=a are checked against
/// LIS/LDS of rot(w)<=a.
AuditReport audit_rot_evac_frame(const EnumSpec& spec, const AuditOptions& options = {});

/// Dist(T, b) = Dist(E(T), b) as multisets for every frame box b, plus
/// sum Dist(T, b) + sum Dist(T, b*) = q(q+1).
AuditReport audit_dist(const EnumSpec& spec, const AuditOptions& options = {});

struct ScanOptions {
  std::uint64_t budget = 0;  // tableaux to process in this run; 0 = unlimited
  std::string checkpoint_path;
  std::uint64_t checkpoint_every = 10'000;
  std::optional<json> resume;  // a checkpoint written by an earlier run
};

/// Checks T = P^q(T) over Inc^q(3×n). Reports a counterexample or "no
/// counterexample found"; never claims the statement true. Verdict Incomplete
/// when the budget runs out, with a resumable checkpoint.
AuditReport scan_conjecture_3row(int n, int q, const ScanOptions& options = {});

/// Searches the given specs for a rotation-symmetric S with a box off the frame
/// and a promotion orbit whose wt_S average is not (q+1)|S|/2. Returns the failing report.
std::optional<AuditReport> find_nonframe_homomesy_violation(std::span<const EnumSpec> specs,
                                                            const AuditOptions& options = {});

/// Re-derives a failure from a witness object alone. True iff the failure is confirmed.
bool recheck_witness(const json& witness);

}  // namespace inctab
