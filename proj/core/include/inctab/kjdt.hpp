#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "inctab/shape.hpp"
#include "inctab/tableau.hpp"

namespace inctab {

/// Receives every intermediate filling of a slide or promotion, labelled by the step that produced it.
using StageObserver = std::function<void(std::string_view label, const BulletFilling& stage)>;

/// swap_i: on each edge-connected component (4-adjacency) of boxes holding i
/// or a bullet that has at least two boxes, exchange i and bullet. Singleton
/// components and all other boxes are untouched. An involution.
BulletFilling swap(int i, const BulletFilling& x);
void swap_in_place(int i, BulletFilling& x);

/// In_I: add a bullet to each box of I. Every box of I must be an inner corner.
BulletFilling add_bullets(const IncreasingTableau& t, std::span<const Box> corners);

/// Out: delete every bullet. Each bullet must sit at an outer corner.
IncreasingTableau remove_bullets(const BulletFilling& x);

/// One K-jeu de taquin slide into the inner corners I.
IncreasingTableau slide(const IncreasingTableau& t, std::span<const Box> corners,
                        const StageObserver& observer = {});

/// Chooses the inner-corner set for each slide of a rectification.
class CornerStrategy {
 public:
  enum class Kind { AllCorners, FixedSequence, SeededRandom };

  static CornerStrategy all_corners() { return CornerStrategy(Kind::AllCorners); }
  /// Uses the given sets in order, then falls back to all corners once they run out.
  static CornerStrategy fixed_sequence(std::vector<std::vector<Box>> sets);
  /// A uniformly random nonempty subset of the current corners at each step.
  static CornerStrategy seeded_random(std::uint64_t seed);

  Kind kind() const { return kind_; }

  /// Next corner set for a shape with at least one inner corner.
  /// Throws PreconditionError if a fixed set is not a nonempty subset of the corners.
  std::vector<Box> next(const Shape& shape);

 private:
  explicit CornerStrategy(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<std::vector<Box>> sequence_;
  std::size_t position_ = 0;
  std::mt19937_64 rng_;
};

/// Slide until the shape is straight. Each slide strictly shrinks the inner partition.
IncreasingTableau rectify(const IncreasingTableau& t, CornerStrategy strategy, const StageObserver& observer = {});

/// Longest strictly increasing / strictly decreasing subsequence.
int lis(const Word& w);
int lds(const Word& w);
int lis(std::span<const int> letters);

}  // namespace inctab
