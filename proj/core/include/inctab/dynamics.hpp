#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "inctab/kjdt.hpp"
#include "inctab/tableau.hpp"

namespace inctab {

/// K-promotion: 1 -> bullet, swap_2 .. swap_q, bullet -> q+1, decrement.
/// Works on skew shapes too. The observer sees the q+1 stages between T and P(T).
IncreasingTableau promote(const IncreasingTableau& t, const StageObserver& observer = {});

/// Inverse of promote: increment, q+1 -> bullet, swap_q .. swap_2, bullet -> 1.
IncreasingTableau promote_inverse(const IncreasingTableau& t);

/// P^k for any integer k; negative powers use promote_inverse.
IncreasingTableau promote_power(const IncreasingTableau& t, std::int64_t k);

/// K-evacuation, built from shapes of P^(q-a)(T)<=a. Straight shapes only.
IncreasingTableau evacuate(const IncreasingTableau& t);

/// Dual K-evacuation, built from shapes of P^(-a)(T)<=a. Straight shapes only.
IncreasingTableau dual_evacuate(const IncreasingTableau& t);

/// Window of the K-theoretic growth diagram: row j holds the shape vector of P^j(T),
/// and cell (i, j) sits at column i + j.
class GrowthDiagram {
 public:
  GrowthDiagram(int q, std::int64_t j_min, std::vector<ShapeVector> rows);

  int ceiling() const { return q_; }
  std::int64_t j_min() const { return j_min_; }
  std::int64_t j_max() const { return j_min_ + static_cast<std::int64_t>(rows_.size()) - 1; }

  const ShapeVector& row(std::int64_t j) const;
  const Partition& cell(int i, std::int64_t j) const { return row(j)[i]; }

  /// Column x from bottom to top: cells (0, x), (1, x-1), ..., (q, x-q).
  /// Throws PreconditionError if the window does not contain rows x-q..x.
  ShapeVector column(std::int64_t x) const;

  /// (k, rank) for diagonals k = 1..2q+1, diagonal k holding the cells with
  /// i + 2j = first_diagonal + k - 1. The rank of a cell is i; each point is the
  /// lowest cell on that diagonal whose partition contains b. Diagonals with no
  /// such cell in the window are skipped.
  std::vector<std::pair<int, int>> lattice_path(const Box& b, std::int64_t first_diagonal) const;

 private:
  int q_;
  std::int64_t j_min_;
  std::vector<ShapeVector> rows_;
};

GrowthDiagram growth_diagram(const IncreasingTableau& t, std::int64_t j_min, std::int64_t j_max);

inline constexpr std::uint64_t kDefaultOrbitBudget = 10'000'000;

/// A full promotion orbit in promotion order, starting at the tableau it was computed from.
struct Orbit {
  std::vector<IncreasingTableau> elements;
  std::size_t canonical_index = 0;  // lexicographically smallest row-major entries

  std::size_t size() const { return elements.size(); }
  const IncreasingTableau& canonical() const { return elements[canonical_index]; }
};

/// Promote until T recurs. Throws BudgetExceeded after `budget` promotions.
Orbit orbit(const IncreasingTableau& t, std::uint64_t budget = kDefaultOrbitBudget);

/// Orbit size only; keeps one tableau in memory.
std::uint64_t orbit_size(const IncreasingTableau& t, std::uint64_t budget = kDefaultOrbitBudget);

}  // namespace inctab
