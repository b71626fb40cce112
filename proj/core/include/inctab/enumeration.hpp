#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "inctab/dynamics.hpp"
#include "inctab/tableau.hpp"

namespace inctab {

/// Inc^q(shape) for a straight shape.
struct EnumSpec {
  Shape shape;
  int q = 0;
};

/// Streams Inc^q(λ) in row-major lexicographic order of entries. Backtracks
/// box by box with entry(b) > max(left, up) and entry(b) <= q - (longest
/// right/down path from b to the rim of λ). Every partial filling inside those
/// bounds extends, so the search never dead-ends.
///
/// A shard pins the value of the first non-forced box, giving independent
/// sub-streams whose concatenation in shard order is the full stream.
class TableauEnumerator {
 public:
  explicit TableauEnumerator(const EnumSpec& spec);
  TableauEnumerator(const EnumSpec& spec, int shard_value);

  /// Advance to the next tableau; false when exhausted.
  bool next();
  /// Valid after next() returned true.
  IncreasingTableau current() const;
  std::span<const int> current_entries() const { return entries_; }

  /// Skip forward so that the next tableau returned is the first one strictly
  /// after `entries` in enumeration order.
  void resume_after(std::span<const int> entries);

 private:
  bool descend(int from);

  EnumSpec spec_;
  std::vector<Box> boxes_;
  std::vector<int> left_, up_;  // storage index of left/upper neighbour or -1
  std::vector<int> slack_;      // longest right/down path length from each box
  std::vector<int> entries_;
  int shard_index_ = -1;
  int shard_value_ = 0;
  bool started_ = false;
  bool done_ = false;

  int lower(int k) const;
  int upper(int k) const;

  friend std::vector<int> shard_values(const EnumSpec&);
  friend int shard_box_index(const EnumSpec&);
};

/// Storage index of the first box with more than one admissible value, or -1.
int shard_box_index(const EnumSpec& spec);
/// Admissible values of that box, one shard each; empty when no box branches.
std::vector<int> shard_values(const EnumSpec& spec);

void enumerate(const EnumSpec& spec, const std::function<void(const IncreasingTableau&)>& visit);
std::vector<IncreasingTableau> enumerate_all(const EnumSpec& spec);

/// |Inc^q(λ)|, sharded over `jobs` threads.
std::uint64_t count(const EnumSpec& spec, int jobs = 1);

/// Every promotion orbit of Inc^q(λ), each once, ordered by canonical representative.
/// Each orbit's elements start at its canonical representative.
std::vector<Orbit> orbit_partition(const EnumSpec& spec, int jobs = 1,
                                   std::uint64_t budget = kDefaultOrbitBudget);

/// Run fn(0..n-1) across `jobs` threads. Exceptions are rethrown after all workers stop.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace inctab
